#include "rydint/angular_profile.hpp"

#include <cmath>
#include <cstdio>

#include "rydint/errors.hpp"

namespace rydint {

namespace {

void require_s_states(const Channel& ch) {
    if (ch.a.l != 0 || ch.b.l != 0 || ch.a.j != half || ch.b.j != half)
        throw ArgumentError("angular profiles are defined for ns1/2 initial pairs only (got " +
                            ch.a.label() + ", " + ch.b.label() + ")");
}

void require_s_state_psi(const ZeemanPairState& psi) {
    if (std::abs(psi.norm2() - 1.0) > 1e-12)
        throw ArgumentError("pair state must be normalized");
}

} // namespace

std::array<std::complex<double>, 4> rotation_coefficients(const ZeemanPairState& psi,
                                                          double theta) {
    require_s_state_psi(psi);
    auto d = wigner_d_half(theta);
    // (d x d) |psi> in the product basis |++>,|+->,|-+>,|-->
    std::array<std::complex<double>, 4> rot{};
    for (int ia = 0; ia < 2; ++ia)
        for (int ib = 0; ib < 2; ++ib) {
            std::complex<double> s = 0;
            for (int ja = 0; ja < 2; ++ja)
                for (int jb = 0; jb < 2; ++jb) s += d[ia][ja] * d[ib][jb] * psi.amp[2 * ja + jb];
            rot[2 * ia + ib] = s;
        }
    ZeemanPairState rotated;
    rotated.amp = rot;
    std::array<std::complex<double>, 4> c{};
    c[0] = rotated.overlap_eig(EigState::Singlet);
    c[1] = rotated.overlap_eig(EigState::Triplet0);
    c[2] = rotated.overlap_eig(EigState::TripletPlus);
    c[3] = rotated.overlap_eig(EigState::TripletMinus);
    return c;
}

double f_factor(const ZeemanPairState& psi, double theta, const Channel& ch) {
    require_s_states(ch);
    auto c = rotation_coefficients(psi, theta);
    double f = 0.0;
    int i = 0;
    for (EigState l : {EigState::Singlet, EigState::Triplet0, EigState::TripletPlus,
                       EigState::TripletMinus})
        f += std::norm(c[i++]) * angular_factor_D(ch, l);
    return f;
}

double vdw_angular_mhz(const ZeemanPairState& psi, double theta,
                       const std::vector<Channel>& channels, double r_um) {
    if (r_um <= 0) throw ArgumentError("R must be positive");
    double u_ghz = 0.0;
    double r6 = std::pow(r_um, 6);
    for (const auto& ch : channels) {
        if (ch.delta_mhz == 0.0)
            throw ArgumentError("resonant channel in vdW sum: " + ch.a.label() + "+" +
                                ch.b.label() + " -> " + ch.alpha.label() + "+" +
                                ch.beta.label());
        double f = f_factor(psi, theta, ch);
        double delta_ghz = ch.delta_mhz * units::mhz_to_ghz;
        u_ghz += -f * ch.c3_ghz_um3 * ch.c3_ghz_um3 / delta_ghz / r6;
    }
    return u_ghz * units::ghz_to_mhz;
}

double resonant_angular_potential_mhz(const Channel& ch, const ZeemanPairState& psi,
                                      double theta, double r_um) {
    double f = f_factor(psi, theta, ch);
    return pair_potential_mhz(ch, f, r_um);
}

AngularProfile angular_profile(const ZeemanPairState& psi, const std::vector<Channel>& channels,
                               double r_um, int n_theta) {
    if (n_theta < 2) throw ArgumentError("need at least two theta samples");
    AngularProfile p;
    p.r_um = r_um;
    for (int i = 0; i < n_theta; ++i) {
        double th = M_PI * i / (n_theta - 1);
        p.theta_rad.push_back(th);
        std::array<double, 4> f{};
        for (std::size_t k = 0; k < channels.size() && k < 4; ++k)
            f[k] = f_factor(psi, th, channels[k]);
        p.f.push_back(f);
        p.u_ghz.push_back(vdw_angular_mhz(psi, th, channels, r_um) * units::mhz_to_ghz);
    }
    return p;
}

std::string profile_to_csv(const AngularProfile& p) {
    std::string out = "theta_deg,f_1,f_2,f_3,f_4,U_GHz\n";
    char buf[256];
    for (std::size_t i = 0; i < p.theta_rad.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.6g,%.12g,%.12g,%.12g,%.12g,%.12g\n",
                      p.theta_rad[i] * 180.0 / M_PI, p.f[i][0], p.f[i][1], p.f[i][2], p.f[i][3],
                      p.u_ghz[i]);
        out += buf;
    }
    return out;
}

} // namespace rydint
