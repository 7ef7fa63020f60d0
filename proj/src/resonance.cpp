#include "rydint/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <thread>

#include "rydint/errors.hpp"
#include "rydint/radial.hpp"

namespace rydint {

namespace {

constexpr std::array<std::pair<int, int>, 4> kJPairs{{{1, 1}, {1, 3}, {3, 1}, {3, 3}}};

std::string fmt(double v, const char* spec = "%.10g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

} // namespace

void SearchConfig::validate() const {
    if (na_min < 20 || na_max < na_min) throw ArgumentError("bad n_a range");
    if (defect_frac <= 0) throw ArgumentError("defect threshold must be positive");
    if (c3_floor_ghz_um3 < 0) throw ArgumentError("C3 floor must be nonnegative");
    if (!channels[0] && !channels[1] && !channels[2] && !channels[3])
        throw ArgumentError("no channels selected");
}

std::vector<Channel> enumerate_channels(const AtomicDatabase& db, Species sa, Species sb,
                                        int na, int nb) {
    // p-level assignment per the defect-figure conventions: the atom with the
    // smaller ns keeps np = ns, the other drops to np = ns - 1 (atom a drops
    // on ties, matching the ns_Cs <= ns_Rb branch)
    int npa, npb;
    if (na < nb) {
        npa = na;
        npb = nb - 1;
    } else {
        npa = na - 1;
        npb = nb;
    }
    std::vector<Channel> out;
    FineLevel a{sa, na, 0, half}, b{sb, nb, 0, half};
    for (auto [tja, tjb] : kJPairs) {
        FineLevel alpha{sa, npa, 1, HalfInt(tja)};
        FineLevel beta{sb, npb, 1, HalfInt(tjb)};
        out.push_back(make_channel(db, a, b, alpha, beta));
    }
    return out;
}

int channel_index(const Channel& ch) {
    for (std::size_t k = 0; k < kJPairs.size(); ++k)
        if (ch.alpha.j.twice() == kJPairs[k].first && ch.beta.j.twice() == kJPairs[k].second)
            return static_cast<int>(k) + 1;
    throw ArgumentError("channel is not one of the four s->p fine-structure combinations");
}

EigState strongest_eigenvector(int ci) {
    switch (ci) {
    case 1:
    case 4:
        return EigState::Triplet0; // 16/9, 34/9
    case 2:
    case 3:
        return EigState::Singlet; // 2
    default:
        throw ArgumentError("channel index must be 1..4");
    }
}

std::vector<ResonanceRecord> find_resonances(const AtomicDatabase& db, const SearchConfig& cfg) {
    cfg.validate();
    int nb_min = cfg.nb_min, nb_max = cfg.nb_max;
    if (nb_min == 0 && nb_max == 0) {
        nb_min = cfg.na_min - 10;
        nb_max = cfg.na_max + 10;
    }
    nb_min = std::max(nb_min, 20);
    bool same_species = cfg.species_a == cfg.species_b;

    struct Task {
        int na, nb;
    };
    std::vector<Task> tasks;
    for (int na = cfg.na_min; na <= cfg.na_max; ++na)
        for (int nb = nb_min; nb <= nb_max; ++nb) {
            if (same_species && nb < na) continue; // (na,nb) == (nb,na) swapped
            tasks.push_back({na, nb});
        }

    auto run_task = [&](const Task& t) {
        std::vector<ResonanceRecord> out;
        double spacing_mhz = db.level_spacing_ghz(cfg.species_a, t.na) * units::ghz_to_mhz;
        for (auto& ch : enumerate_channels(db, cfg.species_a, cfg.species_b, t.na, t.nb)) {
            int ci = channel_index(ch);
            if (!cfg.channels[ci - 1]) continue;
            if (std::abs(ch.delta_mhz) >= cfg.defect_frac * spacing_mhz) continue;
            if (ch.identical_initials) continue; // same-level pairs never pass, skip
            if (std::abs(ch.c3_ghz_um3) < cfg.c3_floor_ghz_um3) continue;
            if (ch.delta_mhz == 0.0) continue;   // exactly resonant: no vdW row
            EigState strongest = strongest_eigenvector(ci);
            ResonanceRecord rec;
            rec.channel_index = ci;
            rec.channel = ch;
            rec.delta_mhz = ch.delta_mhz;
            rec.c3_ghz_um3 = ch.c3_ghz_um3;
            rec.uvdw_ghz_um6 = vdw_coefficient_ghz_um6(ch, strongest);
            rec.rc_um = crossover_radius_um(ch, strongest);
            rec.strongest = strongest;
            out.push_back(rec);
        }
        return out;
    };

    int nthreads = cfg.threads > 0 ? cfg.threads
                                   : static_cast<int>(std::thread::hardware_concurrency());
    nthreads = std::max(1, std::min<int>(nthreads, 16));

    // fixed slot per task: aggregation independent of scheduling
    std::vector<std::vector<ResonanceRecord>> slots(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            slots[i] = run_task(tasks[i]);
        }
    };
    std::vector<std::thread> pool;
    for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::vector<ResonanceRecord> all;
    for (auto& s : slots)
        for (auto& r : s) all.push_back(std::move(r));
    std::sort(all.begin(), all.end(), [](const ResonanceRecord& x, const ResonanceRecord& y) {
        if (x.channel.a.n != y.channel.a.n) return x.channel.a.n < y.channel.a.n;
        if (x.channel.b.n != y.channel.b.n) return x.channel.b.n < y.channel.b.n;
        return x.channel_index < y.channel_index;
    });
    return all;
}

DefectCurve defect_curve(const AtomicDatabase& db, Species sa, Species sb, int na_min,
                         int na_max, int nb_offset) {
    if (na_min < 20 || na_max < na_min) throw ArgumentError("bad n range");
    DefectCurve curve;
    for (int na = na_min; na <= na_max; ++na) {
        int nb = na + nb_offset;
        std::array<double, 4> d{};
        auto chans = enumerate_channels(db, sa, sb, na, nb);
        for (auto& ch : chans) d[channel_index(ch) - 1] = ch.delta_mhz;
        curve.n.push_back(na);
        curve.delta_mhz.push_back(d);
    }
    return curve;
}

std::string records_to_csv(const std::vector<ResonanceRecord>& recs) {
    std::string out = "channel_index,a,alpha,b,beta,delta_MHz,C3_GHz_um3,UvdW_GHz_um6,Rc_um\n";
    for (const auto& r : recs) {
        out += std::to_string(r.channel_index) + ',';
        out += std::string(species_info(r.channel.a.species).name) + r.channel.a.label() + ',';
        out += std::string(species_info(r.channel.alpha.species).name) + r.channel.alpha.label() +
               ',';
        out += std::string(species_info(r.channel.b.species).name) + r.channel.b.label() + ',';
        out += std::string(species_info(r.channel.beta.species).name) + r.channel.beta.label() +
               ',';
        out += fmt(r.delta_mhz, "%.6g") + ',' + fmt(r.c3_ghz_um3, "%.6g") + ',' +
               fmt(r.uvdw_ghz_um6, "%.6g") + ',' + fmt(r.rc_um, "%.6g") + '\n';
    }
    return out;
}

namespace {

std::string level_json(const FineLevel& lv) {
    return std::string("{\"species\":\"") + species_info(lv.species).name +
           "\",\"n\":" + std::to_string(lv.n) + ",\"l\":" + std::to_string(lv.l) +
           ",\"j\":\"" + lv.j.str() + "\"}";
}

} // namespace

std::string records_to_json(const std::vector<ResonanceRecord>& recs) {
    std::string out = "[";
    bool first = true;
    for (const auto& r : recs) {
        if (!first) out += ',';
        first = false;
        out += "{\"channel_index\":" + std::to_string(r.channel_index);
        out += ",\"a\":" + level_json(r.channel.a);
        out += ",\"alpha\":" + level_json(r.channel.alpha);
        out += ",\"b\":" + level_json(r.channel.b);
        out += ",\"beta\":" + level_json(r.channel.beta);
        out += ",\"delta_MHz\":" + fmt(r.delta_mhz);
        out += ",\"C3_GHz_um3\":" + fmt(r.c3_ghz_um3);
        out += ",\"UvdW_GHz_um6\":" + fmt(r.uvdw_ghz_um6);
        out += ",\"Rc_um\":" + fmt(r.rc_um);
        out += "}";
    }
    out += "]";
    return out;
}

} // namespace rydint
