#pragma once

// Seeded generators for pairs, monomials, forms and chains, and the property
// suites that bind the modules together. Sample i of a suite draws from its own
// generator seeded by derive_seed(root, i), so sharding never changes a report.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "modhom/forms.hpp"
#include "modhom/hochschild.hpp"
#include "modhom/modpair.hpp"
#include "modhom/parallel.hpp"

namespace modhom {

struct SuiteConfig {
    std::uint64_t seed = 1;
    std::size_t samples = 1000;
    std::size_t max_s = 2;
    std::size_t max_t = 2;
    int max_r = 3;
    std::size_t max_n = 4;
    int exp_lo = -3;
    int exp_hi = 3;
    /// Multidegree window for table-style suites: dx in [deg_lo, deg_hi], dy in [0, ydeg_hi].
    int deg_lo = -3;
    int deg_hi = 3;
    int ydeg_hi = 3;
    /// Largest homological degree checked by cyclic_oracle.
    long cyclic_n_hi = 8;
    int pole_bound = 4;

    /// Throws std::invalid_argument if a bound is not positive or a window is empty.
    void validate() const;
};

struct CaseFailure {
    std::size_t index = 0;
    std::uint64_t seed = 0;  // sample seed; replays the case through sample_rng
    std::string check;
    std::string pair;
    std::string input;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t cases = 0;
    std::map<std::string, std::size_t> checks;  // check name -> evaluations
    std::vector<CaseFailure> failures;
    double wall_seconds = 0;

    bool passed() const { return failures.empty(); }
};

/// JSON encoding; wall time is left out unless requested so equal runs give equal bytes.
nlohmann::ordered_json to_json(const SuiteReport& report, bool with_time = false);

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite or an invalid config.
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg, Execution exec = Execution::Parallel);

/// splitmix64 step applied to root ^ golden-ratio multiple of index.
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index);

using Rng = std::mt19937_64;
Rng sample_rng(std::uint64_t root, std::size_t index);

ModulusPair generate_pair(Rng& rng, const SuiteConfig& cfg);
/// Nonzero rational with numerator in [-3, 3] and denominator in [1, 3].
Rational generate_coefficient(Rng& rng);

/// Random chain of degree n whose every term lies in `cls` (P_HH or M_HH).
/// Small windows are enumerated and sampled; larger ones are built factor by
/// factor and pushed into the class. Throws std::invalid_argument if cls is
/// FULL_HH or no in-class tensor exists in the exponent window.
ChainElement generate_chain(const SuiteConfig& cfg, Rng& rng, const ModulusPair& p, std::size_t n, ChainClass cls);

/// Random q-form whose every term lies in `cls` (P_OMEGA or M_OMEGA).
/// Throws std::invalid_argument if q > s + t, cls is FULL or the window is empty.
LogForm generate_form(const SuiteConfig& cfg, Rng& rng, const ModulusPair& p, std::size_t q, FormClass cls);

}  // namespace modhom
