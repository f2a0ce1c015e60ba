#pragma once

#include "staircase/enumerate.hpp"
#include "staircase/poly.hpp"
#include "staircase/tableau.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace staircase {

// Entry rates alpha (left) and delta (right), exit rates gamma (left) and beta
// (right), hop rates u (right) and q (left).
struct AsepParams {
    BigRational alpha = 1;
    BigRational beta = 1;
    BigRational gamma = 0;
    BigRational delta = 0;
    BigRational q = 0;
    BigRational u = 1;

    Point point() const { return {alpha, beta, gamma, delta, q, u}; }
};

// Dense solves are limited to 2^10 states.
inline constexpr unsigned kMaxChainSize = 10;

// Discrete-time chain on {0,1}^n: every move has probability rate/(n+1) and the
// self-loop takes the remainder.
class AsepChain {
public:
    using Row = std::vector<std::pair<std::uint32_t, BigRational>>;

    unsigned size() const noexcept { return n_; }
    std::size_t state_count() const noexcept { return rows_.size(); }

    // Nonzero transitions out of a state, sorted by target, self-loop included.
    const Row& row(std::uint32_t from) const { return rows_.at(from); }
    BigRational probability(const StateWord& from, const StateWord& to) const;

private:
    friend AsepChain build_chain(unsigned n, const AsepParams& params);

    unsigned n_ = 0;
    std::vector<Row> rows_;
};

// Throws DomainError unless every parameter lies in [0, 1] and the self-loop
// probabilities are non-negative.
AsepChain build_chain(unsigned n, const AsepParams& params);

// Strong connectivity of the transition digraph.
bool is_irreducible(const AsepChain& chain);

struct StationaryDist {
    unsigned n = 0;
    std::map<StateWord, BigRational> probabilities;

    const BigRational& operator[](const StateWord& tau) const { return probabilities.at(tau); }
    friend bool operator==(const StationaryDist&, const StationaryDist&) = default;
};

// Solves pi P = pi, sum pi = 1 by exact Gaussian elimination. Throws
// DegeneracyError when the chain is reducible.
StationaryDist stationary_exact(const AsepChain& chain);

// pi(tau) = gf_by_type(tau) / Z_n at the parameter point.
StationaryDist stationary_tableaux(const TypeGenerating& table, const AsepParams& params);
StationaryDist stationary_tableaux(unsigned n, const AsepParams& params);

// Stationary current: Z_{n-1} (ab u^(n-1) - gd q^(n-1)) / Z_n. The u power makes
// the numerator homogeneous; at u = 1 this is the familiar closed form.
struct CurrentForm {
    GfPoly numerator;
    GfPoly denominator;
};
CurrentForm current_symbolic(unsigned n);
BigRational current(unsigned n, const AsepParams& params);

// Net flow across bond (i, i+1): < u t_i (1 - t_{i+1}) - q (1 - t_i) t_{i+1} >.
BigRational bond_current(const StationaryDist& dist, unsigned bond, const AsepParams& params);
// Net flow entering at the left boundary: < a (1 - t_1) - g t_1 >.
BigRational left_boundary_current(const StationaryDist& dist, const AsepParams& params);
// Net flow leaving at the right boundary: < b t_n - d (1 - t_n) >.
BigRational right_boundary_current(const StationaryDist& dist, const AsepParams& params);

// < t_{i_1} ... t_{i_m} > from tableaux with alpha/delta at those diagonal positions.
BigRational m_point(const TypeGenerating& table, const std::vector<unsigned>& positions,
                    const AsepParams& params);
BigRational m_point(unsigned n, const std::vector<unsigned>& positions, const AsepParams& params);

// The three reflection / particle-hole identities, checked as polynomial
// identities over every type.
struct SymmetryReport {
    unsigned n = 0;
    std::size_t checks = 0;
    std::optional<std::string> failed_identity; // "left-right", "arrow-reversal", "particle-hole"
    std::optional<StateWord> failing_type;

    bool ok() const noexcept { return !failed_identity.has_value(); }
};
SymmetryReport check_symmetries(const TypeGenerating& table);
SymmetryReport check_symmetries(unsigned n);

} // namespace staircase
