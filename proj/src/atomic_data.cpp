#include "rydint/atomic_data.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "rydint/errors.hpp"

namespace rydint {

HalfInt HalfInt::parse(const std::string& s) {
    try {
        if (auto pos = s.find('/'); pos != std::string::npos) {
            int num = std::stoi(s.substr(0, pos));
            int den = std::stoi(s.substr(pos + 1));
            if (den != 2) throw ArgumentError("half-integer denominator must be 2: " + s);
            return HalfInt(num);
        }
        if (s.find('.') != std::string::npos) {
            double v = std::stod(s);
            double tv = 2.0 * v;
            int t = static_cast<int>(std::llround(tv));
            if (std::abs(tv - t) > 1e-9)
                throw ArgumentError("not a half-integer: " + s);
            return HalfInt(t);
        }
        return HalfInt(2 * std::stoi(s));
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw ArgumentError("cannot parse half-integer: " + s);
    }
}

namespace {

const SpeciesInfo kSpecies[] = {
    {Species::Rb87, "87Rb", units::mass_rb87_u, units::rydberg_reduced_ghz(units::mass_rb87_u)},
    {Species::Cs133, "133Cs", units::mass_cs133_u,
     units::rydberg_reduced_ghz(units::mass_cs133_u)},
};

std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

int parse_l(const std::string& tok) {
    static const std::string letters = "spdfghi";
    if (tok.size() == 1) {
        auto pos = letters.find(static_cast<char>(std::tolower((unsigned char)tok[0])));
        if (pos != std::string::npos) return static_cast<int>(pos);
    }
    try {
        return std::stoi(tok);
    } catch (const std::exception&) {
        throw ArgumentError("cannot parse orbital angular momentum: " + tok);
    }
}

} // namespace

const SpeciesInfo& species_info(Species s) { return kSpecies[static_cast<int>(s)]; }

Species parse_species(const std::string& token) {
    std::string t = lower(token);
    if (t == "87rb" || t == "rb87" || t == "rb" || t == "rubidium") return Species::Rb87;
    if (t == "133cs" || t == "cs133" || t == "cs" || t == "cesium" || t == "caesium")
        return Species::Cs133;
    throw ArgumentError("unknown species: " + token);
}

std::string FineLevel::label() const {
    static const char* letters = "spdfghi";
    std::string ll = l <= 6 ? std::string(1, letters[l]) : "(l=" + std::to_string(l) + ")";
    return std::to_string(n) + ll + j.str();
}

void FineLevel::validate() const {
    if (n < 4) throw ArgumentError("n must be >= 4, got " + std::to_string(n));
    if (l < 0 || l >= n) throw ArgumentError("need 0 <= l < n for " + label());
    HalfInt twol = HalfInt::from_int(l);
    if ((j - twol).abs() != half)
        throw ArgumentError("j must be l +- 1/2 for " + label());
}

FineLevel make_level(Species sp, int n, int l, HalfInt j) {
    FineLevel lv{sp, n, l, j};
    lv.validate();
    return lv;
}

double QuantumDefectSeries::eval(int n) const {
    // one fixed-point pass: corrections at n - d0, the convention the
    // published Ritz coefficients are fitted in
    double x = n - coeffs[0];
    double x2 = x * x;
    double d = coeffs[0];
    double p = x2;
    for (std::size_t k = 1; k < coeffs.size(); ++k) {
        d += coeffs[k] / p;
        p *= x2;
    }
    return d;
}

AtomicDatabase AtomicDatabase::load(const std::string& dir) {
    AtomicDatabase db;

    auto slurp = [&](const std::string& name) {
        std::ifstream in(dir + "/" + name);
        if (!in) throw DataNotFoundError("cannot open " + dir + "/" + name);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };

    // quantum_defects.txt: species l j d0 d2 d4 d6 source...
    {
        std::string text = slurp("quantum_defects.txt");
        db.hashes_.emplace_back("quantum_defects.txt", fnv1a(text));
        std::istringstream lines(text);
        std::string line;
        int lineno = 0;
        while (std::getline(lines, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream t(line);
            std::string sp_tok, l_tok, j_tok;
            if (!(t >> sp_tok)) continue; // blank
            double d0, d2, d4, d6;
            if (!(t >> l_tok >> j_tok >> d0 >> d2 >> d4 >> d6))
                throw DataNotFoundError("malformed quantum_defects.txt line " +
                                        std::to_string(lineno));
            std::string source;
            std::getline(t, source);
            auto b = source.find_first_not_of(" \t");
            source = b == std::string::npos ? "" : source.substr(b);

            QuantumDefectSeries s;
            s.species = parse_species(sp_tok);
            s.l = parse_l(l_tok);
            s.j = HalfInt::parse(j_tok);
            s.coeffs = {d0, d2, d4, d6};
            s.source = source;
            auto key = std::make_tuple(static_cast<int>(s.species), s.l, s.j.twice());
            if (!db.defects_.emplace(key, s).second)
                throw DataNotFoundError("duplicate quantum-defect record at line " +
                                        std::to_string(lineno));
        }
    }

    // lifetimes.txt: species n l j tau_us source...
    {
        std::string text = slurp("lifetimes.txt");
        db.hashes_.emplace_back("lifetimes.txt", fnv1a(text));
        std::istringstream lines(text);
        std::string line;
        int lineno = 0;
        while (std::getline(lines, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream t(line);
            std::string sp_tok, l_tok, j_tok;
            int n;
            double tau;
            if (!(t >> sp_tok)) continue;
            if (!(t >> n >> l_tok >> j_tok >> tau))
                throw DataNotFoundError("malformed lifetimes.txt line " + std::to_string(lineno));
            std::string source;
            std::getline(t, source);

            LifetimeEntry e;
            e.level = FineLevel{parse_species(sp_tok), n, parse_l(l_tok), HalfInt::parse(j_tok)};
            if (tau <= 0)
                throw DataNotFoundError("nonpositive lifetime at line " + std::to_string(lineno));
            e.tau_us = tau;
            e.source = source;
            auto key = std::make_tuple(static_cast<int>(e.level.species), e.level.n,
                                       e.level.l, e.level.j.twice());
            if (!db.lifetimes_.emplace(key, e).second)
                throw DataNotFoundError("duplicate lifetime record at line " +
                                        std::to_string(lineno));
        }
    }

    return db;
}

bool AtomicDatabase::has_defect_series(Species sp, int l, HalfInt j) const {
    return defects_.count(std::make_tuple(static_cast<int>(sp), l, j.twice())) > 0;
}

const QuantumDefectSeries& AtomicDatabase::defect_series(Species sp, int l, HalfInt j) const {
    auto it = defects_.find(std::make_tuple(static_cast<int>(sp), l, j.twice()));
    if (it == defects_.end())
        throw DataNotFoundError(std::string("no quantum-defect series for ") +
                                species_info(sp).name + " l=" + std::to_string(l) +
                                " j=" + j.str());
    return it->second;
}

double AtomicDatabase::effective_n(const FineLevel& lv) const {
    lv.validate();
    return lv.n - defect_series(lv.species, lv.l, lv.j).eval(lv.n);
}

double AtomicDatabase::level_energy_ghz(const FineLevel& lv) const {
    double ns = effective_n(lv);
    return -species_info(lv.species).rydberg_ghz / (ns * ns);
}

double AtomicDatabase::pair_defect_mhz(const FineLevel& a, const FineLevel& alpha,
                                       const FineLevel& b, const FineLevel& beta) const {
    double da = level_energy_ghz(alpha) - level_energy_ghz(a);
    double db_ = level_energy_ghz(beta) - level_energy_ghz(b);
    return (da + db_) * units::ghz_to_mhz;
}

double AtomicDatabase::level_spacing_ghz(Species sp, int n) const {
    FineLevel lo{sp, n, 0, half}, hi{sp, n + 1, 0, half};
    return std::abs(level_energy_ghz(hi) - level_energy_ghz(lo));
}

double AtomicDatabase::lifetime_us(const FineLevel& lv) const {
    auto it = lifetimes_.find(
        std::make_tuple(static_cast<int>(lv.species), lv.n, lv.l, lv.j.twice()));
    if (it == lifetimes_.end())
        throw DataNotFoundError("no lifetime entry for " +
                                std::string(species_info(lv.species).name) + " " + lv.label());
    return it->second.tau_us;
}

} // namespace rydint
