#include "logsym/logform.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "logsym/errors.hpp"

namespace logsym {

// ---------------------------------------------------------------- ExponentVector

ExponentVector ExponentVector::unit(std::size_t dim, std::size_t k) {
    if (k >= dim) throw DimensionError("unit vector index out of range");
    auto e = zero(dim);
    e[k] = 1;
    return e;
}

int ExponentVector::total() const noexcept { return std::accumulate(entries_.begin(), entries_.end(), 0); }

bool ExponentVector::is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](int a) { return a == 0; });
}

bool ExponentVector::is_nonnegative() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](int a) { return a >= 0; });
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& other) {
    if (other.size() != size()) throw DimensionError("exponent vectors of different length");
    for (std::size_t k = 0; k < size(); ++k) entries_[k] += other.entries_[k];
    return *this;
}

ExponentVector& ExponentVector::operator-=(const ExponentVector& other) {
    if (other.size() != size()) throw DimensionError("exponent vectors of different length");
    for (std::size_t k = 0; k < size(); ++k) entries_[k] -= other.entries_[k];
    return *this;
}

std::string to_string(const ExponentVector& e) {
    std::ostringstream out;
    out << '(';
    for (std::size_t k = 0; k < e.size(); ++k) out << (k ? "," : "") << e[k];
    out << ')';
    return out.str();
}

// ---------------------------------------------------------------- IndexSet

IndexSet::IndexSet(std::initializer_list<std::size_t> indices) {
    std::optional<std::size_t> prev;
    for (std::size_t k : indices) {
        if (k >= kMaxDimension) throw DimensionError("index exceeds supported dimension");
        if (prev && k <= *prev) throw DomainError("index set must be strictly increasing");
        mask_ |= 1U << k;
        prev = k;
    }
}

IndexSet IndexSet::single(std::size_t k) {
    if (k >= kMaxDimension) throw DimensionError("index exceeds supported dimension");
    return from_mask(1U << k);
}

std::size_t IndexSet::size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }

std::size_t IndexSet::bound() const noexcept { return kMaxDimension - static_cast<std::size_t>(std::countl_zero(mask_)); }

std::size_t IndexSet::count_below(std::size_t k) const noexcept {
    if (k >= kMaxDimension) return size();
    return static_cast<std::size_t>(std::popcount(mask_ & ((1U << k) - 1U)));
}

std::size_t IndexSet::count_above(std::size_t k) const noexcept {
    if (k + 1 >= kMaxDimension) return 0;
    return static_cast<std::size_t>(std::popcount(mask_ & ~((2U << k) - 1U)));
}

IndexSet IndexSet::with(std::size_t k) const { return from_mask(mask_ | single(k).mask_); }

IndexSet IndexSet::without(std::size_t k) const { return from_mask(mask_ & ~single(k).mask_); }

std::vector<std::size_t> IndexSet::indices() const {
    std::vector<std::size_t> out;
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    return out;
}

std::strong_ordering operator<=>(IndexSet a, IndexSet b) {
    if (a.mask_ == b.mask_) return std::strong_ordering::equal;
    // Both sequences agree below the first differing index p.  The set holding
    // p is smaller unless the other set stops before p (then it is a prefix).
    const std::uint32_t diff = a.mask_ ^ b.mask_;
    const int p = std::countr_zero(diff);
    const bool a_has_p = ((a.mask_ >> p) & 1U) != 0;
    const IndexSet other = a_has_p ? b : a;
    const bool other_continues = (other.mask_ >> p) != 0;
    const bool a_less = a_has_p ? other_continues : !other_continues;
    return a_less ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string to_string(IndexSet s) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (std::size_t k : s.indices()) {
        out << (first ? "" : ",") << k + 1;
        first = false;
    }
    out << '}';
    return out.str();
}

int shuffle_sign(IndexSet i, IndexSet j) noexcept {
    if (i.intersects(j)) return 0;
    std::size_t inversions = 0;
    for (std::uint32_t m = j.mask(); m != 0; m &= m - 1)
        inversions += i.count_above(static_cast<std::size_t>(std::countr_zero(m)));
    return inversions % 2 == 0 ? 1 : -1;
}

// ---------------------------------------------------------------- LogForm

namespace {

struct TermKeyLess {
    bool operator()(const LogTerm& a, const LogTerm& b) const {
        const auto da = a.idx.size(), db = b.idx.size();
        if (da != db) return da < db;
        if (a.idx != b.idx) return a.idx < b.idx;
        return a.exp < b.exp;
    }
};

bool same_key(const LogTerm& a, const LogTerm& b) { return a.idx == b.idx && a.exp == b.exp; }

void require_same_dim(const LogForm& a, const LogForm& b) {
    if (a.dim() != b.dim())
        throw DimensionError("forms of dimension " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
}

}  // namespace

LogForm normalize(std::size_t dim, std::span<const LogTerm> raw) {
    if (dim > kMaxDimension) throw DimensionError("dimension exceeds " + std::to_string(kMaxDimension));
    // Sort pointers rather than terms: a term owns a heap vector and an mpq.
    std::vector<const LogTerm*> order;
    order.reserve(raw.size());
    for (const auto& t : raw) {
        if (t.exp.size() != dim)
            throw DimensionError("term exponent of length " + std::to_string(t.exp.size()) + " in dimension " +
                                 std::to_string(dim));
        if (t.idx.bound() > dim) throw DimensionError("wedge index outside dimension " + std::to_string(dim));
        if (sgn(t.coeff) != 0) order.push_back(&t);
    }
    std::stable_sort(order.begin(), order.end(), [](const LogTerm* a, const LogTerm* b) { return TermKeyLess{}(*a, *b); });

    std::vector<LogTerm> merged;
    merged.reserve(order.size());
    for (const LogTerm* t : order) {
        if (!merged.empty() && same_key(merged.back(), *t))
            merged.back().coeff += t->coeff;
        else
            merged.push_back(*t);
        if (sgn(merged.back().coeff) == 0) merged.pop_back();
    }

    LogForm out(dim);
    out.terms_ = std::move(merged);
    return out;
}

LogForm normalize(std::span<const LogTerm> raw) { return normalize(raw.empty() ? 0 : raw.front().exp.size(), raw); }

LogForm LogForm::monomial(Rational coeff, ExponentVector exp, IndexSet idx) {
    const auto dim = exp.size();
    const LogTerm t{std::move(coeff), std::move(exp), idx};
    return normalize(dim, std::span(&t, 1));
}

LogForm LogForm::constant(std::size_t dim, Rational value) {
    return monomial(std::move(value), ExponentVector::zero(dim), IndexSet{});
}

LogForm LogForm::eta(std::size_t dim, std::size_t k) {
    if (k >= dim) throw DimensionError("eta index out of range");
    return monomial(Rational(1), ExponentVector::zero(dim), IndexSet::single(k));
}

std::optional<std::size_t> LogForm::degree() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return terms_.front().idx.size();
}

bool LogForm::is_homogeneous() const {
    // Terms are sorted by degree first.
    return terms_.empty() || terms_.front().idx.size() == terms_.back().idx.size();
}

Rational LogForm::coefficient(const ExponentVector& exp, IndexSet idx) const {
    const LogTerm probe{Rational(0), exp, idx};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), probe, TermKeyLess{});
    if (it != terms_.end() && same_key(*it, probe)) return it->coeff;
    return Rational(0);
}

LogForm& LogForm::operator+=(const LogForm& other) {
    require_same_dim(*this, other);
    std::vector<LogTerm> all = terms_;
    all.insert(all.end(), other.terms_.begin(), other.terms_.end());
    *this = normalize(dim_, all);
    return *this;
}

LogForm& LogForm::operator-=(const LogForm& other) {
    require_same_dim(*this, other);
    std::vector<LogTerm> all = terms_;
    for (const auto& t : other.terms_) all.push_back({-t.coeff, t.exp, t.idx});
    *this = normalize(dim_, all);
    return *this;
}

LogForm& LogForm::operator*=(const Rational& q) {
    if (sgn(q) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= q;
    return *this;
}

LogForm LogForm::shifted(const ExponentVector& shift) const {
    if (shift.size() != dim_) throw DimensionError("shift of wrong length");
    LogForm out = *this;
    // A uniform shift preserves the relative order of exponents.
    for (auto& t : out.terms_) t.exp += shift;
    return out;
}

bool operator==(const LogForm& a, const LogForm& b) {
    if (a.dim_ != b.dim_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k) {
        const auto& s = a.terms_[k];
        const auto& t = b.terms_[k];
        if (!same_key(s, t) || s.coeff != t.coeff) return false;
    }
    return true;
}

std::string to_string(const LogForm& form) {
    if (form.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : form.terms()) {
        const bool negative = sgn(t.coeff) < 0;
        out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        std::vector<std::string> factors;
        const Rational mag = abs(t.coeff);
        if (mag != 1 || (t.exp.is_zero() && t.idx.empty())) factors.push_back(to_string(mag));
        if (!t.exp.is_zero()) factors.push_back("z^" + to_string(t.exp));
        if (!t.idx.empty()) factors.push_back("eta" + to_string(t.idx));
        for (std::size_t k = 0; k < factors.size(); ++k) out << (k ? "*" : "") << factors[k];
        first = false;
    }
    return out.str();
}

// ---------------------------------------------------------------- operations

LogForm wedge(const LogForm& a, const LogForm& b) {
    require_same_dim(a, b);
    std::vector<LogTerm> raw;
    raw.reserve(a.size() * b.size());
    for (const auto& s : a.terms()) {
        for (const auto& t : b.terms()) {
            const int sign = shuffle_sign(s.idx, t.idx);
            if (sign == 0) continue;
            Rational c = s.coeff * t.coeff;
            if (sign < 0) c = -c;
            raw.push_back({std::move(c), s.exp + t.exp, IndexSet::from_mask(s.idx.mask() | t.idx.mask())});
        }
    }
    return normalize(a.dim(), raw);
}

LogForm exterior_derivative(const LogForm& form) {
    std::vector<LogTerm> raw;
    raw.reserve(form.size() * form.dim());
    for (const auto& t : form.terms()) {
        for (std::size_t k = 0; k < form.dim(); ++k) {
            if (t.exp[k] == 0 || t.idx.contains(k)) continue;
            // eta_k ^ eta_I: move eta_k past the members of I below k.
            Rational c = t.coeff * t.exp[k];
            if (t.idx.count_below(k) % 2 == 1) c = -c;
            raw.push_back({std::move(c), t.exp, t.idx.with(k)});
        }
    }
    return normalize(form.dim(), raw);
}

bool is_log_along(const LogForm& form, std::size_t i) {
    if (i >= form.dim()) throw DomainError("branch index out of range");
    return std::all_of(form.terms().begin(), form.terms().end(), [i](const LogTerm& t) { return t.exp[i] >= 0; });
}

LogForm residue(const LogForm& form, std::size_t i) {
    if (!is_log_along(form, i))
        throw InvalidResidueError("form has a pole of order >= 2 along z_" + std::to_string(i + 1));
    std::vector<LogTerm> raw;
    for (const auto& t : form.terms()) {
        if (t.exp[i] != 0 || !t.idx.contains(i)) continue;
        Rational c = t.coeff;
        if (t.idx.count_above(i) % 2 == 1) c = -c;
        raw.push_back({std::move(c), t.exp, t.idx.without(i)});
    }
    return normalize(form.dim(), raw);
}

Rational biresidue(const LogForm& phi, std::size_t i, std::size_t j) {
    if (i == j) throw DomainError("biresidue needs two distinct branches");
    const LogForm r = residue(residue(phi, j), i);
    if (r.empty()) return Rational(0);
    if (r.size() != 1 || !r.terms().front().idx.empty() || !r.terms().front().exp.is_zero())
        throw DomainError("iterated residue is not a constant: " + to_string(r));
    return r.terms().front().coeff;
}

std::map<ExponentVector, LogForm> multidegree_split(const LogForm& form) {
    std::map<ExponentVector, std::vector<LogTerm>> buckets;
    for (const auto& t : form.terms()) buckets[t.exp].push_back(t);
    std::map<ExponentVector, LogForm> out;
    for (auto& [exp, terms] : buckets) out.emplace(exp, normalize(form.dim(), terms));
    return out;
}

bool is_honest(const LogForm& form, std::size_t first_non_branch) {
    for (const auto& t : form.terms()) {
        for (std::size_t k = first_non_branch; k < form.dim(); ++k) {
            const int needed = t.idx.contains(k) ? 1 : 0;
            if (t.exp[k] < needed) return false;
        }
    }
    return true;
}

LogForm quotient_by(const LogForm& form, IndexSet killed) {
    std::vector<LogTerm> kept;
    for (const auto& t : form.terms())
        if (!t.idx.intersects(killed)) kept.push_back(t);
    return normalize(form.dim(), kept);
}

}  // namespace logsym
