#include "modj/fourier.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>

namespace modj {

namespace series_int {

namespace {
// sigma_r(n) for n = 1..n_max via divisor sieve.
std::vector<BigInt> divisor_sums(std::size_t n_max, unsigned r) {
    std::vector<BigInt> s(n_max + 1, BigInt(0));
    for (std::size_t d = 1; d <= n_max; ++d) {
        BigInt dr = 1;
        for (unsigned t = 0; t < r; ++t) dr *= BigInt(d);
        for (std::size_t m = d; m <= n_max; m += d) s[m] += dr;
    }
    return s;
}
}  // namespace

ZSeries mul(const ZSeries& a, const ZSeries& b, std::size_t n) {
    ZSeries r(n + 1, BigInt(0));
    for (std::size_t i = 0; i < a.size() && i <= n; ++i) {
        if (a[i] == 0) continue;
        std::size_t jmax = std::min(b.size() - 1, n - i);
        for (std::size_t j = 0; j <= jmax; ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

ZSeries inverse(const ZSeries& a, std::size_t n) {
    if (a.empty() || a[0] != 1) throw error("series inverse needs unit constant term");
    ZSeries r(n + 1, BigInt(0));
    r[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        BigInt acc = 0;
        std::size_t imax = std::min(k, a.size() - 1);
        for (std::size_t i = 1; i <= imax; ++i) acc += a[i] * r[k - i];
        r[k] = -acc;
    }
    return r;
}

ZSeries eisenstein_e4(std::size_t n) {
    auto s3 = divisor_sums(n, 3);
    ZSeries e(n + 1, BigInt(0));
    e[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) e[k] = 240 * s3[k];
    return e;
}

ZSeries eisenstein_e6(std::size_t n) {
    auto s5 = divisor_sums(n, 5);
    ZSeries e(n + 1, BigInt(0));
    e[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) e[k] = -504 * s5[k];
    return e;
}

ZSeries delta_pentagonal(std::size_t n) {
    // eta-product: prod (1-q^k) = sum_m (-1)^m q^{m(3m-1)/2} over m in Z
    ZSeries eta(n + 1, BigInt(0));
    for (long m = 0;; ++m) {
        long e1 = m * (3 * m - 1) / 2;
        long e2 = m * (3 * m + 1) / 2;
        if (e1 > static_cast<long>(n) && e2 > static_cast<long>(n)) break;
        long sign = (m % 2 == 0) ? 1 : -1;
        if (e1 <= static_cast<long>(n)) eta[e1] += sign;
        if (m > 0 && e2 <= static_cast<long>(n)) eta[e2] += sign;
    }
    // eta^24 via squarings: 24 = 16 + 8
    ZSeries e2 = mul(eta, eta, n);
    ZSeries e4 = mul(e2, e2, n);
    ZSeries e8 = mul(e4, e4, n);
    ZSeries e16 = mul(e8, e8, n);
    return mul(e16, e8, n);
}

ZSeries delta_niebur(std::size_t n) {
    // tau(n) = n^4 sigma(n) - 24 sum_{i<n} i^2 (35 i^2 - 52 i n + 18 n^2) sigma(i) sigma(n-i)
    auto s1 = divisor_sums(n + 1, 1);
    ZSeries d(n + 1, BigInt(0));
    d[0] = 1;  // tau(1); the series is Delta/q, so index m holds tau(m+1)
    for (std::size_t m = 1; m <= n; ++m) {
        std::size_t nn = m + 1;
        BigInt N(static_cast<unsigned long>(nn));
        BigInt tau = N * N * N * N * s1[nn];
        BigInt acc = 0;
        for (std::size_t i = 1; i < nn; ++i) {
            BigInt I(static_cast<unsigned long>(i));
            acc += I * I * (35 * I * I - 52 * I * N + 18 * N * N) * s1[i] * s1[nn - i];
        }
        d[m] = tau - 24 * acc;
    }
    return d;
}

}  // namespace series_int

FourierTable FourierTable::build(std::size_t K, std::size_t max_terms) {
    if (K < 1) throw error("FourierTable: K must be >= 1");
    if (K > max_terms)
        throw resource_error("FourierTable: requested " + std::to_string(K) +
                             " terms, ceiling is " + std::to_string(max_terms));
    using namespace series_int;
    std::size_t n = K + 1;  // j*q needs terms through q^{K+1}

    ZSeries delta = delta_pentagonal(n);
    ZSeries delta2 = delta_niebur(n);
    if (delta != delta2)
        throw error("FourierTable: pentagonal and recurrence routes for Delta disagree");

    ZSeries e4 = eisenstein_e4(n);
    ZSeries e6 = eisenstein_e6(n);
    // Identity check E4^3 - E6^2 = 1728 * q * (Delta/q), term by term.
    ZSeries e43 = mul(mul(e4, e4, n), e4, n);
    ZSeries e62 = mul(e6, e6, n);
    for (std::size_t m = 0; m <= n; ++m) {
        BigInt lhs = e43[m] - e62[m];
        BigInt rhs = (m == 0) ? BigInt(0) : BigInt(1728) * delta[m - 1];
        if (lhs != rhs) throw error("FourierTable: E4^3 - E6^2 != 1728*Delta");
    }

    // j*q = E4^3 / (Delta/q)
    ZSeries jq = mul(e43, inverse(delta, n), n);
    if (jq[0] != 1 || jq[1] != 744) throw error("FourierTable: wrong principal part");
    std::vector<BigInt> coeffs(K);
    for (std::size_t k = 1; k <= K; ++k) {
        coeffs[k - 1] = jq[k + 1];
        if (coeffs[k - 1] <= 0) throw error("FourierTable: nonpositive a_k, build invalid");
    }
    return FourierTable(std::move(coeffs));
}

const BigInt& FourierTable::a(std::size_t k) const {
    if (k < 1 || k > coeffs_.size()) throw error("FourierTable: index out of range");
    return coeffs_[k - 1];
}

long FourierTable::log2_abs(std::size_t k) const {
    if (k == 0) return 10;  // 744 < 2^10
    const BigInt& v = a(k);
    return static_cast<long>(mpz_sizeinbase(v.backend().data(), 2));
}

namespace {
constexpr char kMagic[4] = {'M', 'J', 'F', 'T'};
constexpr std::uint32_t kVersion = 1;

void put_u64(std::ostream& os, std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    os.write(reinterpret_cast<char*>(b), 8);
}
std::uint64_t get_u64(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    if (!is) throw error("FourierTable: truncated cache");
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
    return v;
}
}  // namespace

void FourierTable::save(std::ostream& os) const {
    os.write(kMagic, 4);
    put_u64(os, kVersion);
    put_u64(os, coeffs_.size());
    std::vector<unsigned char> bytes;
    for (const auto& c : coeffs_) {
        int sign = mpz_sgn(c.backend().data());
        bytes.assign((mpz_sizeinbase(c.backend().data(), 2) + 7) / 8, 0);
        std::size_t count = 0;
        if (sign != 0)
            mpz_export(bytes.data(), &count, -1 /* LE word order */, 1, 0, 0,
                       c.backend().data());
        // signed length prefix: the sign of the prefix is the sign of the value
        std::uint64_t len = static_cast<std::uint64_t>(count);
        if (sign < 0) len = ~len + 1;  // two's complement
        put_u64(os, len);
        os.write(reinterpret_cast<const char*>(bytes.data()),
                 static_cast<std::streamsize>(count));
    }
}

FourierTable FourierTable::load(std::istream& is) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::string(magic, 4) != std::string(kMagic, 4))
        throw error("FourierTable: bad cache magic");
    if (get_u64(is) != kVersion) throw error("FourierTable: cache version mismatch");
    std::size_t n = static_cast<std::size_t>(get_u64(is));
    std::vector<BigInt> coeffs(n);
    std::vector<unsigned char> bytes;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t raw = get_u64(is);
        bool neg = raw > (std::uint64_t(1) << 62);
        std::size_t len = static_cast<std::size_t>(neg ? (~raw + 1) : raw);
        if (len > (1u << 28)) throw error("FourierTable: absurd cache entry length");
        bytes.resize(len);
        is.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(len));
        if (!is) throw error("FourierTable: truncated cache");
        BigInt v = 0;
        if (len > 0) mpz_import(v.backend().data(), len, -1, 1, 0, 0, bytes.data());
        if (neg) v = -v;
        coeffs[i] = v;
    }
    return FourierTable(std::move(coeffs));
}

TableProvider& TableProvider::instance() {
    static TableProvider p;
    return p;
}

std::shared_ptr<const FourierTable> TableProvider::get(std::size_t K) {
    if (K < 1) K = 1;
    std::lock_guard<std::mutex> lock(mutex_);
    if (table_ && table_->size() >= K) return table_;
    if (K > max_terms_)
        throw resource_error("FourierTable: need " + std::to_string(K) +
                             " terms, ceiling is " + std::to_string(max_terms_));

    namespace fs = std::filesystem;
    const char* cache_dir = std::getenv("MODJ_CACHE_DIR");
    fs::path cache_file;
    if (cache_dir) {
        cache_file = fs::path(cache_dir) / "fourier_j.bin";
        std::ifstream in(cache_file, std::ios::binary);
        if (in) {
            try {
                auto t = std::make_shared<FourierTable>(FourierTable::load(in));
                if (t->size() >= K) {
                    table_ = t;
                    return table_;
                }
            } catch (const error&) {
                // stale or corrupt cache: rebuild below
            }
        }
    }

    std::size_t target = std::max<std::size_t>(K, 128);
    // grow geometrically so repeated small bumps do not trigger rebuild storms
    if (table_ && table_->size() * 2 > target) target = table_->size() * 2;
    target = std::min(target, max_terms_);
    table_ = std::make_shared<FourierTable>(FourierTable::build(target, max_terms_));

    if (cache_dir) {
        std::error_code ec;
        fs::create_directories(cache_dir, ec);
        std::ofstream out(cache_file, std::ios::binary | std::ios::trunc);
        if (out) table_->save(out);
    }
    return table_;
}

}  // namespace modj
