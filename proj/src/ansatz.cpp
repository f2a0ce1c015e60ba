#include "staircase/ansatz.hpp"

#include "staircase/errors.hpp"

namespace staircase {

namespace {

const GfPoly& var_poly(Var v)
{
    static const std::array<GfPoly, kVarCount> vars = {
        GfPoly::var(Var::Alpha), GfPoly::var(Var::Beta), GfPoly::var(Var::Gamma),
        GfPoly::var(Var::Delta), GfPoly::var(Var::Q),    GfPoly::var(Var::U)};
    return vars[index_of(v)];
}

GfPoly q_power(long e)
{
    return GfPoly::var(Var::Q, static_cast<unsigned>(e));
}

GfPoly at(const RowVector& row, long j, long l)
{
    if (j < 0 || l < 0) {
        return {};
    }
    auto it = row.find({static_cast<unsigned>(j), static_cast<unsigned>(l)});
    return it == row.end() ? GfPoly{} : it->second;
}

void accumulate(RowVector& row, unsigned j, unsigned l, const GfPoly& value)
{
    if (value.is_zero()) {
        return;
    }
    auto& slot = row[{j, l}];
    slot += value;
    if (slot.is_zero()) {
        row.erase({j, l});
    }
}

RowVector add(RowVector lhs, const RowVector& rhs)
{
    for (const auto& [idx, value] : rhs) {
        accumulate(lhs, idx.first, idx.second, value);
    }
    return lhs;
}

void check_verify_length(unsigned max_len)
{
    if (max_len > kMaxVerifyLength) {
        throw CapacityError("verification supports word lengths up to " + std::to_string(kMaxVerifyLength));
    }
}

Counterexample failure(const AnsatzWord& x, const AnsatzWord& y, std::optional<std::array<long, 4>> idx,
                       GfPoly lhs, GfPoly rhs)
{
    return Counterexample{x.to_string(), y.to_string(), idx, std::move(lhs), std::move(rhs)};
}

} // namespace

AnsatzWord AnsatzWord::parse(std::string_view text)
{
    std::vector<Letter> letters;
    for (char ch : text) {
        if (ch == 'D') {
            letters.push_back(Letter::D);
        } else if (ch == 'E') {
            letters.push_back(Letter::E);
        } else {
            throw ParseError(std::string("word letters must be D or E, got '") + ch + "'");
        }
    }
    return AnsatzWord(std::move(letters));
}

AnsatzWord AnsatzWord::of_type(const StateWord& tau)
{
    std::vector<Letter> letters;
    for (unsigned s = 1; s <= tau.size(); ++s) {
        letters.push_back(tau.occupied(s) ? Letter::D : Letter::E);
    }
    return AnsatzWord(std::move(letters));
}

StateWord AnsatzWord::type() const
{
    std::uint32_t bits = 0;
    for (std::size_t s = 0; s < letters_.size(); ++s) {
        if (letters_[s] == Letter::D) {
            bits |= 1U << s;
        }
    }
    return StateWord(static_cast<unsigned>(letters_.size()), bits);
}

std::string AnsatzWord::to_string() const
{
    std::string s;
    for (Letter l : letters_) {
        s += l == Letter::D ? 'D' : 'E';
    }
    return s;
}

AnsatzWord operator+(const AnsatzWord& lhs, const AnsatzWord& rhs)
{
    std::vector<Letter> letters = lhs.letters_;
    letters.insert(letters.end(), rhs.letters_.begin(), rhs.letters_.end());
    return AnsatzWord(std::move(letters));
}

std::vector<AnsatzWord> words_of_length(std::size_t length)
{
    std::vector<AnsatzWord> out;
    for (std::uint64_t code = 0; code < (std::uint64_t(1) << length); ++code) {
        std::vector<Letter> letters(length);
        for (std::size_t s = 0; s < length; ++s) {
            // most significant bit first gives lexicographic order
            letters[s] = ((code >> (length - 1 - s)) & 1U) ? Letter::E : Letter::D;
        }
        out.emplace_back(std::move(letters));
    }
    return out;
}

std::vector<AnsatzWord> words_up_to(std::size_t max_length)
{
    std::vector<AnsatzWord> out;
    for (std::size_t len = 0; len <= max_length; ++len) {
        auto words = words_of_length(len);
        out.insert(out.end(), words.begin(), words.end());
    }
    return out;
}

GfPoly TransferTensor::at(long i, long j, long k, long l) const
{
    if (i < 0 || j < 0 || k < 0 || l < 0) {
        return {};
    }
    auto it = entries.find({unsigned(i), unsigned(j), unsigned(k), unsigned(l)});
    return it == entries.end() ? GfPoly{} : it->second;
}

const GfPoly& TransferAlgebra::entry(Letter letter, long i, long j, long k, long l)
{
    static const GfPoly zero;
    if (i < 0 || j < 0 || k < 0 || l < 0 || j < i || l > k + 1) {
        return zero;
    }
    const Key key{static_cast<long>(letter), i, j, k, l};
    {
        std::shared_lock lock(mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) {
            return it->second;
        }
    }
    GfPoly value = compute(letter, i, j, k, l);
    std::unique_lock lock(mutex_);
    return memo_.try_emplace(key, std::move(value)).first->second;
}

GfPoly TransferAlgebra::compute(Letter letter, long i, long j, long k, long l)
{
    if (letter == Letter::D) {
        if (i == j - 1 && k == 0 && l == 0) {
            return var_poly(Var::Delta) * q_power(i);
        }
        if (i == j && k == 0 && l == 1) {
            return var_poly(Var::Alpha) * q_power(i);
        }
        GfPoly sum = entry(Letter::D, i, j - 1, k - 1, l) + entry(Letter::E, i, j - 1, k - 1, l);
        return var_poly(Var::Delta) * sum + entry(Letter::D, i, j, k - 1, l - 1);
    }
    if (i == j && k == 0 && l == 0) {
        return var_poly(Var::Beta) * q_power(i);
    }
    if (i == j && k == 0 && l == 1) {
        return var_poly(Var::Gamma) * q_power(i);
    }
    GfPoly sum = entry(Letter::D, i, j, k - 1, l) + entry(Letter::E, i, j, k - 1, l);
    return var_poly(Var::Beta) * sum + var_poly(Var::Q) * entry(Letter::E, i, j, k - 1, l - 1);
}

RowVector TransferAlgebra::apply(const RowVector& row, Letter letter)
{
    RowVector out;
    for (const auto& [idx, value] : row) {
        const auto [a, b] = idx;
        // a letter moves (a, b) to (j, l) with a <= j, l <= b + 1, j + l <= a + b + 1
        for (unsigned j = a; j <= a + b + 1; ++j) {
            for (unsigned l = 0; l <= b + 1 && j + l <= a + b + 1; ++l) {
                const GfPoly& e = entry(letter, a, j, b, l);
                if (!e.is_zero()) {
                    accumulate(out, j, l, value * e);
                }
            }
        }
    }
    return out;
}

RowVector TransferAlgebra::apply(const RowVector& row, const AnsatzWord& word)
{
    RowVector out = row;
    for (Letter l : word.letters()) {
        out = apply(out, l);
    }
    return out;
}

RowVector TransferAlgebra::apply_sum(const RowVector& row)
{
    return add(apply(row, Letter::D), apply(row, Letter::E));
}

RowVector TransferAlgebra::wx(const AnsatzWord& word)
{
    return apply(boundary_w(), word);
}

GfPoly TransferAlgebra::wx(const AnsatzWord& word, unsigned j, unsigned l)
{
    return at(wx(word), j, l);
}

GfPoly TransferAlgebra::wxv(const AnsatzWord& word)
{
    return sum_entries(wx(word));
}

TransferTensor TransferAlgebra::word_tensor(const AnsatzWord& word, unsigned max_i, unsigned max_k)
{
    TransferTensor tensor;
    for (unsigned i = 0; i <= max_i; ++i) {
        for (unsigned k = 0; k <= max_k; ++k) {
            RowVector start;
            start[{i, k}] = GfPoly::one();
            for (const auto& [idx, value] : apply(start, word)) {
                tensor.entries[{i, idx.first, k, idx.second}] = value;
            }
        }
    }
    return tensor;
}

std::size_t TransferAlgebra::memo_size() const
{
    std::shared_lock lock(mutex_);
    return memo_.size();
}

TransferAlgebra& transfer_algebra()
{
    static TransferAlgebra algebra;
    return algebra;
}

GfPoly transfer_entry(Letter letter, long i, long j, long k, long l)
{
    return transfer_algebra().entry(letter, i, j, k, l);
}

GfPoly partition_function_transfer(unsigned n)
{
    RowVector row = boundary_w();
    for (unsigned s = 0; s < n; ++s) {
        row = transfer_algebra().apply_sum(row);
    }
    return sum_entries(row);
}

RowVector boundary_w()
{
    RowVector w;
    w[{0U, 0U}] = GfPoly::one();
    return w;
}

GfPoly sum_entries(const RowVector& row)
{
    GfPoly total;
    for (const auto& [idx, value] : row) {
        total += value;
    }
    return total;
}

GfPoly lambda(unsigned n)
{
    if (n == 0) {
        return GfPoly::one();
    }
    return var_poly(Var::Alpha) * var_poly(Var::Beta) -
           var_poly(Var::Gamma) * var_poly(Var::Delta) * q_power(n - 1);
}

VerifyReport verify_gma_family(std::string_view family, unsigned max_len)
{
    check_verify_length(max_len);
    auto& alg = transfer_algebra();
    const GfPoly& a = var_poly(Var::Alpha);
    const GfPoly& b = var_poly(Var::Beta);
    const GfPoly& g = var_poly(Var::Gamma);
    const GfPoly& d = var_poly(Var::Delta);
    const GfPoly& q = var_poly(Var::Q);
    const AnsatzWord none;
    const AnsatzWord dd = AnsatzWord::parse("D");
    const AnsatzWord ee = AnsatzWord::parse("E");

    VerifyReport report{std::string(family), max_len, 0, std::nullopt};
    if (family == "I") {
        for (const auto& x : words_up_to(max_len)) {
            const RowVector wx = alg.wx(x);
            const RowVector wxd = alg.apply(wx, Letter::D);
            const RowVector wxe = alg.apply(wx, Letter::E);
            const RowVector wxde = alg.apply(wxd, Letter::E);
            const RowVector wxed = alg.apply(wxe, Letter::D);
            for (const auto& y : words_up_to(max_len - x.size())) {
                const unsigned len = static_cast<unsigned>(x.size() + y.size());
                GfPoly lhs = sum_entries(alg.apply(wxde, y)) - q * sum_entries(alg.apply(wxed, y));
                GfPoly rhs = lambda(len + 2) * (sum_entries(alg.apply(wxd, y)) + sum_entries(alg.apply(wxe, y)));
                ++report.checks;
                if (lhs != rhs) {
                    report.failure = failure(x, y, std::nullopt, lhs, rhs);
                    return report;
                }
            }
        }
    } else if (family == "II") {
        for (const auto& x : words_up_to(max_len)) {
            const RowVector wx = alg.wx(x);
            GfPoly lhs = b * sum_entries(alg.apply(wx, Letter::D)) - d * sum_entries(alg.apply(wx, Letter::E));
            GfPoly rhs = lambda(static_cast<unsigned>(x.size()) + 1) * sum_entries(wx);
            ++report.checks;
            if (lhs != rhs) {
                report.failure = failure(x, none, std::nullopt, lhs, rhs);
                return report;
            }
        }
    } else if (family == "III") {
        for (const auto& y : words_up_to(max_len)) {
            GfPoly lhs = a * alg.wxv(ee + y) - g * alg.wxv(dd + y);
            GfPoly rhs = lambda(static_cast<unsigned>(y.size()) + 1) * alg.wxv(y);
            ++report.checks;
            if (lhs != rhs) {
                report.failure = failure(none, y, std::nullopt, lhs, rhs);
                return report;
            }
        }
    } else {
        throw DomainError("unknown ansatz family '" + std::string(family) + "'");
    }
    return report;
}

std::vector<VerifyReport> verify_gma(unsigned max_len)
{
    return {verify_gma_family("I", max_len), verify_gma_family("II", max_len), verify_gma_family("III", max_len)};
}

VerifyReport verify_decrease(unsigned max_len, unsigned max_index)
{
    auto& alg = transfer_algebra();
    VerifyReport report{"decrease", max_len, 0, std::nullopt};

    // Tensors of every word up to max_len, grown letter by letter from each
    // start (i, k) so that common prefixes are multiplied out once.
    std::map<AnsatzWord, TransferTensor> tensors;
    for (unsigned i = 0; i <= max_index; ++i) {
        for (unsigned k = 0; k <= max_index; ++k) {
            auto grow = [&](auto&& self, const AnsatzWord& w, const RowVector& row) -> void {
                if (!w.empty()) {
                    auto& entries = tensors[w].entries;
                    for (const auto& [idx, value] : row) {
                        entries[{i, idx.first, k, idx.second}] = value;
                    }
                }
                if (w.size() < max_len) {
                    for (Letter letter : {Letter::D, Letter::E}) {
                        // j never decreases along a word, so larger j cannot come back into range
                        RowVector next = alg.apply(row, letter);
                        std::erase_if(next, [&](const auto& kv) { return kv.first.first > max_index; });
                        self(self, w + AnsatzWord({letter}), next);
                    }
                }
            };
            RowVector start;
            start[{i, k}] = GfPoly::one();
            grow(grow, AnsatzWord{}, start);
        }
    }

    for (std::size_t len = 1; len <= max_len; ++len) {
        const GfPoly shift = q_power(static_cast<long>(len));
        for (const auto& y : words_of_length(len)) {
            const TransferTensor& t = tensors[y];
            for (long i = 1; i <= max_index; ++i) {
                for (long j = 0; j <= max_index; ++j) {
                    for (long k = 0; k <= max_index; ++k) {
                        for (long l = 0; l <= max_index; ++l) {
                            GfPoly lhs = t.at(i, j, k, l);
                            GfPoly rhs = shift * t.at(i - 1, j - 1, k, l);
                            ++report.checks;
                            if (lhs != rhs) {
                                report.failure = failure(AnsatzWord{}, y, std::array<long, 4>{i, j, k, l}, lhs, rhs);
                                return report;
                            }
                        }
                    }
                }
            }
        }
    }
    return report;
}

VerifyReport verify_identity(unsigned which, unsigned max_len)
{
    check_verify_length(max_len);
    if (which != 1 && which != 2) {
        throw DomainError("identity index must be 1 or 2");
    }
    auto& alg = transfer_algebra();
    const GfPoly& a = var_poly(Var::Alpha);
    const GfPoly& b = var_poly(Var::Beta);
    const GfPoly& g = var_poly(Var::Gamma);
    const GfPoly& d = var_poly(Var::Delta);
    const GfPoly& q = var_poly(Var::Q);

    VerifyReport report{"identity" + std::to_string(which), max_len, 0, std::nullopt};
    for (const auto& x : words_up_to(max_len)) {
        const long len = static_cast<long>(x.size());
        const RowVector wx = alg.wx(x);
        const RowVector wxd = alg.apply(wx, Letter::D);
        const RowVector wxe = alg.apply(wx, Letter::E);
        RowVector wxde;
        RowVector wxed;
        RowVector wxc;
        if (which == 1) {
            wxde = alg.apply(wxd, Letter::E);
            wxed = alg.apply(wxe, Letter::D);
            wxc = add(wxd, wxe);
        }
        const GfPoly gdq = g * d * q_power(which == 1 ? len + 1 : len);
        for (long j = 0; j <= len + 2; ++j) {
            for (long l = 0; j + l <= len + 2; ++l) {
                GfPoly lhs;
                GfPoly rhs;
                if (which == 1) {
                    lhs = at(wxde, j, l);
                    rhs = q * at(wxed, j, l) + a * b * at(wxc, j, l) - gdq * at(wxc, j - 1, l);
                } else {
                    lhs = b * at(wxd, j, l);
                    rhs = d * at(wxe, j - 1, l) + a * b * at(wx, j, l - 1) - gdq * at(wx, j - 1, l - 1);
                }
                ++report.checks;
                if (lhs != rhs) {
                    report.failure = failure(x, AnsatzWord{}, std::array<long, 4>{j, l, -1, -1}, lhs, rhs);
                    return report;
                }
            }
        }
    }
    return report;
}

} // namespace staircase
