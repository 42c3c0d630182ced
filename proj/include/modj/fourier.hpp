#pragma once

#include "modj/real.hpp"

#include <iosfwd>
#include <memory>
#include <mutex>
#include <vector>

namespace modj {

// Exact Fourier coefficients of the modular j-function:
//   j(z) = q^-1 + 744 + sum_{k>=1} a_k q^k,  q = exp(2 pi i z).
//
// The table is immutable once built.  Coefficients are produced as
// E4^3 / Delta with Delta expanded from the pentagonal-number eta product,
// and the build is accepted only after an independent recurrence for the
// Delta coefficients reproduces them exactly.
class FourierTable {
public:
    // Builds a_1 .. a_K.  Throws resource_error when K > max_terms.
    static FourierTable build(std::size_t K, std::size_t max_terms = kDefaultMaxTerms);

    static constexpr std::size_t kDefaultMaxTerms = 4096;

    std::size_t size() const { return coeffs_.size(); }       // number of stored a_k
    const BigInt& a(std::size_t k) const;                     // a_k, 1 <= k <= size()
    static long constant_term() { return 744; }
    static long principal_coefficient() { return 1; }         // coefficient of q^-1

    // log2 |a_k| rounded up; 0 for k = 0.  Used by truncation selection.
    long log2_abs(std::size_t k) const;

    // Versioned binary cache: little-endian, length-prefixed big integers.
    void save(std::ostream& os) const;
    static FourierTable load(std::istream& is);

private:
    explicit FourierTable(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {}
    std::vector<BigInt> coeffs_;
};

// Process-wide provider: grows the table on demand and shares it read-only.
// If MODJ_CACHE_DIR is set, tables are persisted there across runs.
class TableProvider {
public:
    static TableProvider& instance();

    // Returns a table with size() >= K.  Throws resource_error past the ceiling.
    std::shared_ptr<const FourierTable> get(std::size_t K);

    void set_max_terms(std::size_t m) { max_terms_ = m; }
    std::size_t max_terms() const { return max_terms_; }

private:
    TableProvider() = default;
    std::mutex mutex_;
    std::shared_ptr<const FourierTable> table_;
    std::size_t max_terms_ = FourierTable::kDefaultMaxTerms;
};

namespace series_int {
// Truncated integer power series on q^0..q^n (index = exponent).
using ZSeries = std::vector<BigInt>;

ZSeries eisenstein_e4(std::size_t n);
ZSeries eisenstein_e6(std::size_t n);
ZSeries delta_pentagonal(std::size_t n);   // Delta/q = prod (1-q^k)^24, terms 0..n
ZSeries delta_niebur(std::size_t n);       // same series from the tau recurrence
ZSeries mul(const ZSeries& a, const ZSeries& b, std::size_t n);
ZSeries inverse(const ZSeries& a, std::size_t n);  // requires a[0] = 1
}  // namespace series_int

}  // namespace modj
