#include "rydint/channel.hpp"

#include <algorithm>
#include <cmath>

#include "rydint/errors.hpp"
#include "rydint/radial.hpp"

namespace rydint {

namespace {

constexpr double sqrt6 = 2.449489742783178;

void check_dipole(const FineLevel& lo, const FineLevel& up, const char* leg) {
    if (std::abs(lo.l - up.l) != 1)
        throw ArgumentError(std::string("channel leg ") + leg + " is not dipole-allowed: " +
                            lo.label() + " -> " + up.label());
}

// sum_q C^{20}_{1q1-q} C^{ja' ma'}_{ja ma 1 q} C^{jb' mb'}_{jb mb 1 -q}
double coupling_sum(HalfInt ja, HalfInt ma, HalfInt jb, HalfInt mb, HalfInt jA, HalfInt mA,
                    HalfInt jB, HalfInt mB) {
    HalfInt one = HalfInt::from_int(1), two = HalfInt::from_int(2), zero(0);
    double s = 0.0;
    for (int tq = -2; tq <= 2; tq += 2) {
        HalfInt q(tq);
        double c20 = clebsch_gordan(one, q, one, -q, two, zero);
        double ca = clebsch_gordan(ja, ma, one, q, jA, mA);
        double cb = clebsch_gordan(jb, mb, one, -q, jB, mB);
        s += c20 * ca * cb;
    }
    return s;
}

SurdSum coupling_sum_exact(HalfInt ja, HalfInt ma, HalfInt jb, HalfInt mb, HalfInt jA,
                           HalfInt mA, HalfInt jB, HalfInt mB) {
    HalfInt one = HalfInt::from_int(1), two = HalfInt::from_int(2), zero(0);
    SurdSum s;
    for (int tq = -2; tq <= 2; tq += 2) {
        HalfInt q(tq);
        SurdSum term = SurdSum::sqrt_of(clebsch_gordan_exact(one, q, one, -q, two, zero));
        term = term * SurdSum::sqrt_of(clebsch_gordan_exact(ja, ma, one, q, jA, mA));
        term = term * SurdSum::sqrt_of(clebsch_gordan_exact(jb, mb, one, -q, jB, mB));
        s += term;
    }
    return s;
}

std::vector<std::pair<HalfInt, HalfInt>> pair_states(HalfInt j1, HalfInt j2, HalfInt m) {
    std::vector<std::pair<HalfInt, HalfInt>> out;
    for (int t1 = -j1.twice(); t1 <= j1.twice(); t1 += 2)
        for (int t2 = -j2.twice(); t2 <= j2.twice(); t2 += 2)
            if (t1 + t2 == m.twice()) out.emplace_back(HalfInt(t1), HalfInt(t2));
    return out;
}

} // namespace

Channel make_channel(const AtomicDatabase& db, const FineLevel& a, const FineLevel& b,
                     const FineLevel& alpha, const FineLevel& beta) {
    a.validate();
    b.validate();
    alpha.validate();
    beta.validate();
    check_dipole(a, alpha, "a->alpha");
    check_dipole(b, beta, "b->beta");
    Channel ch{a, b, alpha, beta};
    ch.delta_mhz = db.pair_defect_mhz(a, alpha, b, beta);
    ch.c3_ghz_um3 = c3_coefficient(db, a, alpha, b, beta);
    ch.identical_initials = (a == b);
    return ch;
}

ZeemanPairState ZeemanPairState::product(HalfInt ma, HalfInt mb) {
    if (ma.abs() != half || mb.abs() != half)
        throw ArgumentError("ZeemanPairState::product is for j = 1/2 atoms");
    ZeemanPairState s;
    int ia = ma == half ? 0 : 1;
    int ib = mb == half ? 0 : 1;
    s.amp[2 * ia + ib] = 1.0;
    return s;
}

ZeemanPairState ZeemanPairState::eigenvector(EigState l) {
    constexpr double inv_sqrt2 = 0.7071067811865476;
    ZeemanPairState s;
    switch (l) {
    case EigState::Singlet:
        s.amp[1] = inv_sqrt2;
        s.amp[2] = -inv_sqrt2;
        break;
    case EigState::Triplet0:
        s.amp[1] = inv_sqrt2;
        s.amp[2] = inv_sqrt2;
        break;
    case EigState::TripletPlus:
        s.amp[0] = 1.0;
        break;
    case EigState::TripletMinus:
        s.amp[3] = 1.0;
        break;
    }
    return s;
}

double ZeemanPairState::norm2() const {
    double n = 0;
    for (const auto& c : amp) n += std::norm(c);
    return n;
}

std::complex<double> ZeemanPairState::overlap_eig(EigState l) const {
    ZeemanPairState u = eigenvector(l);
    std::complex<double> s = 0;
    for (int i = 0; i < 4; ++i) s += std::conj(u.amp[i]) * amp[i];
    return s;
}

double dipole_dipole_element_mhz(const Channel& ch, HalfInt ma, HalfInt mb, HalfInt malpha,
                                 HalfInt mbeta, double r_um) {
    if (r_um <= 0) throw ArgumentError("R must be positive");
    if ((ma + mb) != (malpha + mbeta)) return 0.0;
    double c3_mhz = ch.c3_ghz_um3 * units::ghz_to_mhz;
    double s = coupling_sum(ch.a.j, ma, ch.b.j, mb, ch.alpha.j, malpha, ch.beta.j, mbeta);
    return -sqrt6 * c3_mhz / (r_um * r_um * r_um) * s;
}

ChannelBasis channel_basis(const Channel& ch, HalfInt m) {
    ChannelBasis basis;
    basis.initial = pair_states(ch.a.j, ch.b.j, m);
    if (basis.initial.empty())
        throw ArgumentError("no initial Zeeman states with m = " + m.str());
    auto direct = pair_states(ch.alpha.j, ch.beta.j, m);
    for (auto& t : direct) {
        basis.target.push_back(t);
        basis.target_swapped.push_back(false);
    }
    if (ch.identical_initials && !(ch.alpha == ch.beta)) {
        // exchange coupling (ab) <-> (beta alpha)
        auto swapped = pair_states(ch.beta.j, ch.alpha.j, m);
        for (auto& t : swapped) {
            basis.target.push_back(t);
            basis.target_swapped.push_back(true);
        }
    }
    if (basis.target.empty()) throw ArgumentError("empty target manifold for m = " + m.str());
    return basis;
}

Eigen::MatrixXd build_interaction_matrix(const Channel& ch, HalfInt m, double r_um) {
    if (r_um <= 0) throw ArgumentError("R must be positive");
    ChannelBasis basis = channel_basis(ch, m);
    int ni = static_cast<int>(basis.initial.size());
    int nt = static_cast<int>(basis.target.size());
    int n = ni + nt;
    double c3_mhz = ch.c3_ghz_um3 * units::ghz_to_mhz;
    double pref = -sqrt6 * c3_mhz / (r_um * r_um * r_um);

    Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(n, n);
    for (int t = 0; t < nt; ++t) mat(ni + t, ni + t) = ch.delta_mhz;
    for (int i = 0; i < ni; ++i) {
        auto [ma, mb] = basis.initial[i];
        for (int t = 0; t < nt; ++t) {
            auto [m1, m2] = basis.target[t];
            double s = basis.target_swapped[t]
                           ? coupling_sum(ch.a.j, ma, ch.b.j, mb, ch.beta.j, m1, ch.alpha.j, m2)
                           : coupling_sum(ch.a.j, ma, ch.b.j, mb, ch.alpha.j, m1, ch.beta.j, m2);
            mat(i, ni + t) = mat(ni + t, i) = pref * s;
        }
    }
    return mat;
}

ChannelEigensystem channel_eigensystem(const Channel& ch, HalfInt m, double r_um) {
    ChannelEigensystem sys;
    sys.m = m;
    sys.basis = channel_basis(ch, m);
    Eigen::MatrixXd mat = build_interaction_matrix(ch, m, r_um);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mat);
    if (solver.info() != Eigen::Success)
        throw NumericError("eigen-decomposition failed (dim " + std::to_string(mat.rows()) +
                           ", R = " + std::to_string(r_um) + " um)");
    sys.eigenvalues = solver.eigenvalues();
    sys.eigenvectors = solver.eigenvectors();

    // the N_ab branches with dominant initial-state weight; ties resolved by
    // energy ordering (ascending eigenvalue index)
    int ni = static_cast<int>(sys.basis.initial.size());
    int n = static_cast<int>(sys.eigenvalues.size());
    std::vector<std::pair<double, int>> weights;
    for (int k = 0; k < n; ++k) {
        double w = sys.eigenvectors.col(k).head(ni).squaredNorm();
        weights.emplace_back(-w, k); // sort by descending weight, ascending index
    }
    std::sort(weights.begin(), weights.end());
    for (int i = 0; i < ni; ++i) sys.initial_branches.push_back(weights[i].second);
    std::sort(sys.initial_branches.begin(), sys.initial_branches.end());
    return sys;
}

double angular_factor_D(const Channel& ch, HalfInt ma, HalfInt mb) {
    double tot = 0.0;
    for (auto [mA, mB] : pair_states(ch.alpha.j, ch.beta.j, ma + mb)) {
        double s = coupling_sum(ch.a.j, ma, ch.b.j, mb, ch.alpha.j, mA, ch.beta.j, mB);
        tot += s * s;
    }
    double d = 6.0 * tot;
    if (ch.identical_initials && !(ch.alpha == ch.beta)) d *= 2.0;
    return d;
}

Rational angular_factor_D_exact(HalfInt j_alpha, HalfInt j_beta, EigState l, bool doubled) {
    // s-state channels: j_a = j_b = 1/2
    HalfInt jh = half;
    struct Coef {
        ExactSqrt c;
        HalfInt ma, mb;
    };
    std::vector<Coef> u;
    ExactSqrt inv_sqrt2{1, Rational(1, 2)};
    switch (l) {
    case EigState::Singlet:
        u = {{inv_sqrt2, half, -half}, {{-1, Rational(1, 2)}, -half, half}};
        break;
    case EigState::Triplet0:
        u = {{inv_sqrt2, half, -half}, {inv_sqrt2, -half, half}};
        break;
    case EigState::TripletPlus:
        u = {{{1, Rational(1)}, half, half}};
        break;
    case EigState::TripletMinus:
        u = {{{1, Rational(1)}, -half, -half}};
        break;
    }
    HalfInt m = u.front().ma + u.front().mb;

    SurdSum total;
    for (auto [mA, mB] : pair_states(j_alpha, j_beta, m)) {
        SurdSum w;
        for (const auto& comp : u) {
            SurdSum c = SurdSum::sqrt_of(comp.c);
            w += c * coupling_sum_exact(jh, comp.ma, jh, comp.mb, j_alpha, mA, j_beta, mB);
        }
        total += w * w;
    }
    Rational d = (SurdSum::rational(Rational(6)) * total).as_rational();
    if (doubled) d *= Rational(2);
    return d;
}

double angular_factor_D(const Channel& ch, EigState l) {
    if (ch.a.j != half || ch.b.j != half)
        throw ArgumentError("eigenvector angular factors are defined for ns1/2 pairs");
    bool doubled = ch.identical_initials && !(ch.alpha == ch.beta);
    Rational d = angular_factor_D_exact(ch.alpha.j, ch.beta.j, l, doubled);
    return boost::rational_cast<double>(d);
}

ExtractedD angular_factor_D_extracted(const Channel& ch, EigState l) {
    ZeemanPairState u = ZeemanPairState::eigenvector(l);
    HalfInt m = (l == EigState::TripletPlus) ? HalfInt(2)
                : (l == EigState::TripletMinus) ? HalfInt(-2)
                                                : HalfInt(0);

    double d_guess = std::max(angular_factor_D(ch, l), 0.1);
    ExtractedD out{0.0, false};

    auto extract_at = [&](double r) {
        ChannelEigensystem sys = channel_eigensystem(ch, m, r);
        int ni = static_cast<int>(sys.basis.initial.size());
        // branch with max overlap onto u within the initial subspace
        int best = -1;
        double best_ov = -1.0;
        for (int k : sys.initial_branches) {
            std::complex<double> ov = 0;
            for (int i = 0; i < ni; ++i) {
                auto [ma, mb] = sys.basis.initial[i];
                int ia = ma == half ? 0 : 1, ib = mb == half ? 0 : 1;
                ov += std::conj(u.amp[2 * ia + ib]) * sys.eigenvectors(i, k);
            }
            if (std::abs(ov) > best_ov) {
                best_ov = std::abs(ov);
                best = k;
            }
        }
        double uval = sys.eigenvalues(best);
        // invert U = (d/2)[1 - sqrt(1 + 4 D C3^2/(d^2 R^6))]
        double x = 1.0 - 2.0 * uval / ch.delta_mhz;
        double c3_mhz = ch.c3_ghz_um3 * units::ghz_to_mhz;
        double r6 = std::pow(r, 6);
        return (x * x - 1.0) * ch.delta_mhz * ch.delta_mhz * r6 / (4.0 * c3_mhz * c3_mhz);
    };

    double c3_mhz = std::abs(ch.c3_ghz_um3) * units::ghz_to_mhz;
    if (std::abs(ch.delta_mhz) < 1e-9 * c3_mhz) {
        // resonant channel: fit |U| = sqrt(D) |C3| / R^3 at small R instead
        out.resonant_fit = true;
        double r = 1.0;
        ChannelEigensystem sys = channel_eigensystem(ch, m, r);
        double umin = 0.0;
        for (int k : sys.initial_branches) umin = std::min(umin, sys.eigenvalues(k));
        double ratio = umin * r * r * r / c3_mhz;
        out.value = ratio * ratio;
        return out;
    }

    double rc_est = std::pow(d_guess * c3_mhz * c3_mhz / (ch.delta_mhz * ch.delta_mhz), 1.0 / 6.0);
    double d1 = extract_at(10.0 * rc_est);
    double rc1 = std::pow(std::max(d1, 1e-6) * c3_mhz * c3_mhz /
                              (ch.delta_mhz * ch.delta_mhz),
                          1.0 / 6.0);
    out.value = extract_at(10.0 * rc1);
    return out;
}

double pair_potential_mhz(const Channel& ch, double D, double r_um) {
    if (r_um <= 0) throw ArgumentError("R must be positive");
    if (D < 0) throw ArgumentError("angular factor D must be nonnegative");
    double c3_mhz = ch.c3_ghz_um3 * units::ghz_to_mhz;
    double r3 = r_um * r_um * r_um;
    if (ch.delta_mhz == 0.0) return -std::sqrt(D) * std::abs(c3_mhz) / r3;
    double x = 4.0 * D * c3_mhz * c3_mhz / (ch.delta_mhz * ch.delta_mhz * r3 * r3);
    return 0.5 * ch.delta_mhz * (1.0 - std::sqrt(1.0 + x));
}

double pair_potential_mhz(const Channel& ch, EigState l, double r_um) {
    return pair_potential_mhz(ch, angular_factor_D(ch, l), r_um);
}

double vdw_coefficient_ghz_um6(const Channel& ch, double D) {
    if (ch.delta_mhz == 0.0)
        throw ArgumentError("resonant channel (delta = 0) has no vdW limit");
    double delta_ghz = ch.delta_mhz * units::mhz_to_ghz;
    return -D * ch.c3_ghz_um3 * ch.c3_ghz_um3 / delta_ghz;
}

double vdw_coefficient_ghz_um6(const Channel& ch, EigState l) {
    return vdw_coefficient_ghz_um6(ch, angular_factor_D(ch, l));
}

double crossover_radius_um(const Channel& ch, double D) {
    if (ch.delta_mhz == 0.0 || D <= 0.0)
        throw ArgumentError("crossover radius undefined for delta = 0 or D = 0");
    double delta_ghz = ch.delta_mhz * units::mhz_to_ghz;
    return std::pow(D * ch.c3_ghz_um3 * ch.c3_ghz_um3 / (delta_ghz * delta_ghz), 1.0 / 6.0);
}

double crossover_radius_um(const Channel& ch, EigState l) {
    return crossover_radius_um(ch, angular_factor_D(ch, l));
}

VdwAdditive vdw_additive(const ZeemanPairState& psi, const std::vector<Channel>& channels,
                         double r_um) {
    if (r_um <= 0) throw ArgumentError("R must be positive");
    if (std::abs(psi.norm2() - 1.0) > 1e-12)
        throw ArgumentError("pair state must be normalized");
    VdwAdditive out{0.0, 0.0, false};
    double r6 = std::pow(r_um, 6);
    for (const auto& ch : channels) {
        for (EigState l : {EigState::Singlet, EigState::Triplet0, EigState::TripletPlus,
                           EigState::TripletMinus}) {
            double d = angular_factor_D(ch, l);
            double w = std::norm(psi.overlap_eig(l));
            if (w == 0.0) continue;
            out.u_mhz += w * vdw_coefficient_ghz_um6(ch, d) / r6 * units::ghz_to_mhz;
            if (d > 0.0)
                out.max_rc_um = std::max(out.max_rc_um, crossover_radius_um(ch, d));
        }
    }
    out.below_vdw_range = r_um < 2.0 * out.max_rc_um;
    return out;
}

MultiChannelResult multi_channel_potential(const std::vector<Channel>& channels, HalfInt m,
                                           double r_um, EigState track) {
    if (channels.empty()) throw ArgumentError("need at least one channel");
    if (r_um <= 0) throw ArgumentError("R must be positive");
    for (const auto& ch : channels)
        if (!(ch.a == channels.front().a) || !(ch.b == channels.front().b))
            throw ArgumentError("channels must share the initial pair state");

    ChannelBasis b0 = channel_basis(channels.front(), m);
    int ni = static_cast<int>(b0.initial.size());

    struct Block {
        const Channel* ch;
        ChannelBasis basis;
        int offset;
    };
    std::vector<Block> blocks;
    int ntot = ni;
    for (const auto& ch : channels) {
        Block blk{&ch, channel_basis(ch, m), ntot};
        ntot += static_cast<int>(blk.basis.target.size());
        blocks.push_back(std::move(blk));
    }

    auto assemble = [&](double r) {
        Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(ntot, ntot);
        double r3 = r * r * r;
        for (const auto& blk : blocks) {
            const Channel& ch = *blk.ch;
            double pref = -sqrt6 * ch.c3_ghz_um3 * units::ghz_to_mhz / r3;
            int nt = static_cast<int>(blk.basis.target.size());
            for (int t = 0; t < nt; ++t) mat(blk.offset + t, blk.offset + t) = ch.delta_mhz;
            for (int i = 0; i < ni; ++i) {
                auto [ma, mb] = b0.initial[i];
                for (int t = 0; t < nt; ++t) {
                    auto [m1, m2] = blk.basis.target[t];
                    double s = blk.basis.target_swapped[t]
                                   ? coupling_sum(ch.a.j, ma, ch.b.j, mb, ch.beta.j, m1,
                                                  ch.alpha.j, m2)
                                   : coupling_sum(ch.a.j, ma, ch.b.j, mb, ch.alpha.j, m1,
                                                  ch.beta.j, m2);
                    mat(i, blk.offset + t) = mat(blk.offset + t, i) = pref * s;
                }
            }
        }
        return mat;
    };

    // start far out, track the branch by eigenvector-overlap continuation
    double max_rc = r_um;
    for (const auto& ch : channels)
        for (EigState l : {EigState::Singlet, EigState::Triplet0, EigState::TripletPlus,
                           EigState::TripletMinus}) {
            double d = angular_factor_D(ch, l);
            if (d > 0 && ch.delta_mhz != 0.0)
                max_rc = std::max(max_rc, crossover_radius_um(ch, d));
        }
    double r_start = 5.0 * max_rc;

    // initial-label vector at infinite separation
    ZeemanPairState u = ZeemanPairState::eigenvector(track);
    Eigen::VectorXd v = Eigen::VectorXd::Zero(ntot);
    bool any = false;
    for (int i = 0; i < ni; ++i) {
        auto [ma, mb] = b0.initial[i];
        int ia = ma == half ? 0 : 1, ib = mb == half ? 0 : 1;
        double c = u.amp[2 * ia + ib].real();
        v(i) = c;
        if (c != 0.0) any = true;
    }
    if (!any)
        throw ArgumentError("tracked eigenvector has no weight in the m = " + m.str() +
                            " block");
    v.normalize();

    MultiChannelResult res{0.0, 1.0, false};
    int steps = 60;
    double lr0 = std::log(r_start), lr1 = std::log(r_um);
    Eigen::VectorXd current = v;
    for (int k = 0; k <= steps; ++k) {
        double r = std::exp(lr0 + (lr1 - lr0) * k / steps);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(assemble(r));
        if (solver.info() != Eigen::Success)
            throw NumericError("multichannel eigen-decomposition failed at R = " +
                               std::to_string(r));
        int best = -1;
        double best_ov = -1.0;
        for (int c = 0; c < ntot; ++c) {
            double ov = std::abs(current.dot(solver.eigenvectors().col(c)));
            if (ov > best_ov) {
                best_ov = ov;
                best = c;
            }
        }
        res.min_overlap = std::min(res.min_overlap, best_ov);
        current = solver.eigenvectors().col(best);
        res.u_mhz = solver.eigenvalues()(best);
    }
    res.diabatic_flag = res.min_overlap < 0.5;
    return res;
}

} // namespace rydint
