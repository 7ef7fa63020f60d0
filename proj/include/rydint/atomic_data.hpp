#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rydint/halfint.hpp"
#include "rydint/units.hpp"

namespace rydint {

enum class Species { Rb87, Cs133 };

/// Canonical name ("87Rb") and reduced-mass Rydberg constant.
struct SpeciesInfo {
    Species id;
    const char* name;
    double mass_u;
    double rydberg_ghz; // energies measured relative to the ionization limit
};

const SpeciesInfo& species_info(Species s);
/// Accepts "87Rb", "Rb87", "Rb", "rb", ... Throws ArgumentError.
Species parse_species(const std::string& token);

/// One Rydberg fine-structure level gamma = (species, n, l, j). s = 1/2.
struct FineLevel {
    Species species;
    int n;
    int l;
    HalfInt j;

    /// "48s1/2" style label.
    std::string label() const;
    /// Validates n >= 4, 0 <= l < n, j = l +- 1/2. Throws ArgumentError.
    void validate() const;

    friend bool operator==(const FineLevel&, const FineLevel&) = default;
};

FineLevel make_level(Species sp, int n, int l, HalfInt j);

/// Modified Rydberg-Ritz series delta(n) = d0 + d2/(n-d0)^2 + d4/(n-d0)^4 + ...
/// The corrections are evaluated at n - d0 (one fixed-point pass), which is
/// the convention the published coefficients are fitted in.
struct QuantumDefectSeries {
    Species species;
    int l;
    HalfInt j;
    std::vector<double> coeffs; // d0, d2, d4, d6
    std::string source;

    double eval(int n) const;
};

struct LifetimeEntry {
    FineLevel level;
    double tau_us; // 300 K
    std::string source;
};

/// Quantum defects, level energies and lifetimes for the supported species.
/// Immutable after load; concurrent reads are safe.
class AtomicDatabase {
public:
    /// Loads quantum_defects.txt and lifetimes.txt from dir.
    static AtomicDatabase load(const std::string& dir);

    double effective_n(const FineLevel& lv) const;

    /// -Ry/(n*)^2, GHz (negative, relative to ionization).
    double level_energy_ghz(const FineLevel& lv) const;

    /// [U(alpha)-U(a)] + [U(beta)-U(b)] as delta/2pi in MHz, sign preserved.
    double pair_defect_mhz(const FineLevel& a, const FineLevel& alpha,
                           const FineLevel& b, const FineLevel& beta) const;

    /// |U(n+1, s1/2) - U(n, s1/2)| in GHz; the scale for relative-defect filters.
    double level_spacing_ghz(Species sp, int n) const;

    /// Table lookup, no extrapolation. Throws DataNotFoundError.
    double lifetime_us(const FineLevel& lv) const;

    const QuantumDefectSeries& defect_series(Species sp, int l, HalfInt j) const;
    bool has_defect_series(Species sp, int l, HalfInt j) const;

    /// FNV-1a hashes of the loaded files, for reproducibility headers.
    const std::vector<std::pair<std::string, std::uint64_t>>& data_hashes() const {
        return hashes_;
    }

private:
    std::map<std::tuple<int, int, int>, QuantumDefectSeries> defects_; // (species,l,2j)
    std::map<std::tuple<int, int, int, int>, LifetimeEntry> lifetimes_; // (species,n,l,2j)
    std::vector<std::pair<std::string, std::uint64_t>> hashes_;
};

} // namespace rydint
