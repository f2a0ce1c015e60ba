#pragma once

#include "staircase/poly.hpp"
#include "staircase/tableau.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Transfer tensors D, E with boundary vectors W (selects (i, k) = (0, 0)) and
// V (all ones). Everything here is specialized at u = 1.
namespace staircase {

enum class Letter : std::uint8_t { D, E };

// A word in D and E; letter s corresponds to site s (D = occupied).
class AnsatzWord {
public:
    AnsatzWord() = default;
    explicit AnsatzWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    static AnsatzWord parse(std::string_view text);
    static AnsatzWord of_type(const StateWord& tau);

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    const std::vector<Letter>& letters() const noexcept { return letters_; }

    StateWord type() const;
    std::string to_string() const;

    friend AnsatzWord operator+(const AnsatzWord& lhs, const AnsatzWord& rhs);
    friend auto operator<=>(const AnsatzWord&, const AnsatzWord&) = default;

private:
    std::vector<Letter> letters_;
};

// All words of exactly / at most the given length, in lexicographic order D < E.
std::vector<AnsatzWord> words_of_length(std::size_t length);
std::vector<AnsatzWord> words_up_to(std::size_t max_length);

// (j, l) -> entry. Used for W X products: (WX)_{j,l}.
using RowVector = std::map<std::pair<unsigned, unsigned>, GfPoly>;

// Sparse 4-index tensor, entries (i, j, k, l) -> polynomial; absent means zero.
struct TransferTensor {
    std::map<std::array<unsigned, 4>, GfPoly> entries;

    GfPoly at(long i, long j, long k, long l) const;
};

// Memoized D/E entries. Safe to share between threads: lookups take a shared
// lock, inserts an exclusive one.
class TransferAlgebra {
public:
    // Zero whenever an index is negative, j < i or l > k + 1.
    const GfPoly& entry(Letter letter, long i, long j, long k, long l);

    RowVector apply(const RowVector& row, Letter letter);
    RowVector apply(const RowVector& row, const AnsatzWord& word);
    // row * (D + E)
    RowVector apply_sum(const RowVector& row);

    // (WX)_{j,l} for all (j, l).
    RowVector wx(const AnsatzWord& word);
    GfPoly wx(const AnsatzWord& word, unsigned j, unsigned l);
    GfPoly wxv(const AnsatzWord& word);

    // X_{i,j,k,l} for every start with i <= max_i and k <= max_k.
    TransferTensor word_tensor(const AnsatzWord& word, unsigned max_i, unsigned max_k);

    std::size_t memo_size() const;

private:
    using Key = std::array<long, 5>;

    GfPoly compute(Letter letter, long i, long j, long k, long l);

    mutable std::shared_mutex mutex_;
    std::map<Key, GfPoly> memo_;
};

// Process-wide instance used by the free functions below.
TransferAlgebra& transfer_algebra();

GfPoly transfer_entry(Letter letter, long i, long j, long k, long l);

// W (D + E)^n V: the u = 1 partition function.
GfPoly partition_function_transfer(unsigned n);

// The W boundary vector: 1 at (0, 0).
RowVector boundary_w();
// Sum of all entries: multiplication by V.
GfPoly sum_entries(const RowVector& row);

// lambda_0 = 1, lambda_n = ab - gd q^(n-1).
GfPoly lambda(unsigned n);

// Verification of the algebraic identities. A report names the family checked,
// how many exact identities were compared, and the first failure if any.
struct Counterexample {
    std::string x;
    std::string y;
    std::optional<std::array<long, 4>> indices; // (i, j, k, l) or (j, l, -, -)
    GfPoly lhs;
    GfPoly rhs;
};

struct VerifyReport {
    std::string family;
    unsigned max_len = 0;
    std::size_t checks = 0;
    std::optional<Counterexample> failure;

    bool ok() const noexcept { return !failure.has_value(); }
};

inline constexpr unsigned kMaxVerifyLength = 5;

// Family "I", "II" or "III" of the generalized matrix ansatz, over all words
// with |X| + |Y| <= max_len (I), |X| <= max_len (II) or |Y| <= max_len (III).
VerifyReport verify_gma_family(std::string_view family, unsigned max_len);
std::vector<VerifyReport> verify_gma(unsigned max_len);

// Y_{i,j,k,l} = q^|Y| Y_{i-1,j-1,k,l} for 1 <= |Y| <= max_len, 1 <= i <= max_index
// and j, k, l <= max_index.
VerifyReport verify_decrease(unsigned max_len, unsigned max_index);

// The two index-level identities ("identity1", "identity2") for all |X| <= max_len
// and all (j, l) with j + l <= |X| + 2.
VerifyReport verify_identity(unsigned which, unsigned max_len);

} // namespace staircase
