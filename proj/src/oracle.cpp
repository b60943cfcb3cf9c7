#include "xyn/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

namespace xyn {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u128 u128_from_mpz(const mpz_class& v) {
    u128 r = mpz_getlimbn(v.get_mpz_t(), 1);
    return (r << 64) | mpz_getlimbn(v.get_mpz_t(), 0);
}

struct TripleExp {
    std::uint16_t a, b, c;
};

// S-unit values p0^a p1^b p2^c < limit, ascending, exponents alongside.
template <typename Word>
void generate_triples(Word limit, const std::array<u64, 3>& primes, bool require_bc_positive,
                      std::vector<Word>& values, std::vector<TripleExp>& exps) {
    std::vector<std::pair<Word, TripleExp>> items;
    const Word cap = limit - 1;
    for (unsigned c = 0;; ++c) {
        Word pc = 1;
        bool c_ok = true;
        for (unsigned i = 0; i < c; ++i) {
            if (pc > cap / primes[2]) {
                c_ok = false;
                break;
            }
            pc *= primes[2];
        }
        if (!c_ok) break;
        Word pbc = pc;
        for (unsigned b = 0;; ++b) {
            Word v = pbc;
            for (unsigned a = 0;; ++a) {
                if (!require_bc_positive || (b > 0 && c > 0))
                    items.emplace_back(v, TripleExp{static_cast<std::uint16_t>(a),
                                                    static_cast<std::uint16_t>(b),
                                                    static_cast<std::uint16_t>(c)});
                if (v > cap / primes[0]) break;
                v *= primes[0];
            }
            if (pbc > cap / primes[1]) break;
            pbc *= primes[1];
        }
    }
    std::sort(items.begin(), items.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    values.reserve(items.size());
    exps.reserve(items.size());
    for (auto& [v, e] : items) {
        values.push_back(v);
        exps.push_back(e);
    }
}

template <typename Word>
Word pow_word(u64 y, unsigned n) {
    Word r = 1;
    for (unsigned i = 0; i < n; ++i) r *= y;
    return r;
}

inline u64 isqrt_word(u64 m) { return isqrt_u64(m); }
inline u128 isqrt_word(u128 m) { return isqrt_u128(m); }

// Scans y in [y_lo, y_hi]; appends hits. values/exps are shared read-only.
template <typename Word>
void scan_range_words(unsigned n, u64 y_lo, u64 y_hi, const std::vector<Word>& values,
                      const std::vector<TripleExp>& exps, std::vector<Solution>& out) {
    const auto& t1 = squarefilter::residue_table_5760();
    const auto& t2 = squarefilter::residue_table_45045();
    const Word* vals = values.data();

    std::size_t cut =
        std::lower_bound(values.begin(), values.end(), pow_word<Word>(y_lo, n)) - values.begin();
    for (u64 y = y_lo; y <= y_hi; ++y) {
        const Word yn = pow_word<Word>(y, n);
        while (cut < values.size() && vals[cut] < yn) ++cut;
        for (std::size_t i = 0; i < cut; ++i) {
            const Word m = yn - vals[i];
            const u64 lo = static_cast<u64>(m);
            if (!((squarefilter::kMask64 >> (lo & 63)) & 1)) continue;
            u64 r1, r2;
            if constexpr (sizeof(Word) == 8) {
                r1 = lo % squarefilter::kMod1;
                r2 = lo % squarefilter::kMod2;
            } else {
                constexpr u64 k64m1 = (~u64{0} % squarefilter::kMod1) + 1;
                constexpr u64 k64m2 = (~u64{0} % squarefilter::kMod2) + 1;
                const u64 hi = static_cast<u64>(m >> 64);
                r1 = (hi % squarefilter::kMod1 * k64m1 + lo % squarefilter::kMod1) %
                     squarefilter::kMod1;
                r2 = (hi % squarefilter::kMod2 * k64m2 + lo % squarefilter::kMod2) %
                     squarefilter::kMod2;
            }
            if (!t1[r1] || !t2[r2]) continue;
            const Word x = isqrt_word(m);
            if (x * x != m) continue;
            const u64 x64 = static_cast<u64>(x);  // x^2 = m < y^n, so x fits u64 here
            if (std::gcd(x64, y) != 1) continue;
            out.push_back(Solution{mpz_class(x64), mpz_class(y),
                                   SUnitExponents{exps[i].a, exps[i].b, exps[i].c}, n});
        }
    }
}

void scan_range_mpz(unsigned n, u64 y_lo, u64 y_hi, const std::vector<mpz_class>& values,
                    const std::vector<TripleExp>& exps, std::vector<Solution>& out) {
    const auto& t1 = squarefilter::residue_table_5760();
    const auto& t2 = squarefilter::residue_table_45045();

    mpz_class yn, m, x, g;
    mpz_ui_pow_ui(yn.get_mpz_t(), y_lo, n);
    std::size_t cut = std::lower_bound(values.begin(), values.end(), yn) - values.begin();
    for (u64 y = y_lo; y <= y_hi; ++y) {
        mpz_ui_pow_ui(yn.get_mpz_t(), y, n);
        while (cut < values.size() && values[cut] < yn) ++cut;
        for (std::size_t i = 0; i < cut; ++i) {
            mpz_sub(m.get_mpz_t(), yn.get_mpz_t(), values[i].get_mpz_t());
            const u64 lo = mpz_getlimbn(m.get_mpz_t(), 0);
            if (!((squarefilter::kMask64 >> (lo & 63)) & 1)) continue;
            if (!t1[mpz_fdiv_ui(m.get_mpz_t(), squarefilter::kMod1)]) continue;
            if (!t2[mpz_fdiv_ui(m.get_mpz_t(), squarefilter::kMod2)]) continue;
            if (!mpz_perfect_square_p(m.get_mpz_t())) continue;
            mpz_sqrt(x.get_mpz_t(), m.get_mpz_t());
            mpz_gcd_ui(g.get_mpz_t(), x.get_mpz_t(), y);
            if (g != 1) continue;
            out.push_back(Solution{x, mpz_class(y),
                                   SUnitExponents{exps[i].a, exps[i].b, exps[i].c}, n});
        }
    }
}

// Deterministic parallel driver: fixed blocks of y, merged in block order.
template <typename ScanFn>
std::vector<Solution> run_blocks(u64 y_max, unsigned workers, ScanFn scan) {
    const u64 block = std::max<u64>(1024, (y_max - 1) / (u64{workers} * 32) + 1);
    const std::size_t nblocks = static_cast<std::size_t>((y_max - 1) / block) + 1;
    std::vector<std::vector<Solution>> results(nblocks);

    auto worker = [&](std::atomic<std::size_t>& next) {
        for (std::size_t blk; (blk = next.fetch_add(1)) < nblocks;) {
            const u64 lo = 2 + blk * block;
            const u64 hi = std::min(y_max, lo + block - 1);
            if (lo > y_max) continue;
            scan(lo, hi, results[blk]);
        }
    };

    std::atomic<std::size_t> next{0};
    if (workers <= 1) {
        worker(next);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back([&] { worker(next); });
        for (auto& t : pool) t.join();
    }

    std::vector<Solution> out;
    for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
    std::sort(out.begin(), out.end(), solution_less);
    return out;
}

}  // namespace

std::vector<Solution> enumerate_solutions(const SearchConfig& cfg) {
    if (cfg.n < 3) throw std::invalid_argument("enumerate_solutions: n must be >= 3");
    if (cfg.y_max < 2) throw std::invalid_argument("enumerate_solutions: y_max must be >= 2");
    if (!(cfg.primes[0] >= 2 && cfg.primes[0] < cfg.primes[1] && cfg.primes[1] < cfg.primes[2]))
        throw std::invalid_argument("enumerate_solutions: primes must be strictly increasing");
    unsigned workers = cfg.worker_count;
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());

    // Exact dispatch: top of the search is y_max^n.
    mpz_class top;
    mpz_ui_pow_ui(top.get_mpz_t(), cfg.y_max, cfg.n);
    const std::size_t bits = mpz_sizeinbase(top.get_mpz_t(), 2);

    if (bits <= 63) {
        std::vector<u64> values;
        std::vector<TripleExp> exps;
        generate_triples<u64>(static_cast<u64>(top.get_ui()), cfg.primes,
                              cfg.require_bc_positive, values, exps);
        return run_blocks(cfg.y_max, workers, [&](u64 lo, u64 hi, std::vector<Solution>& out) {
            scan_range_words<u64>(cfg.n, lo, hi, values, exps, out);
        });
    }
    if (bits <= 126) {
        std::vector<u128> values;
        std::vector<TripleExp> exps;
        generate_triples<u128>(u128_from_mpz(top), cfg.primes, cfg.require_bc_positive, values,
                               exps);
        return run_blocks(cfg.y_max, workers, [&](u64 lo, u64 hi, std::vector<Solution>& out) {
            scan_range_words<u128>(cfg.n, lo, hi, values, exps, out);
        });
    }

    // Arbitrary-precision fallback; correct for any bounds.
    std::vector<mpz_class> values;
    std::vector<TripleExp> exps;
    {
        std::vector<std::pair<mpz_class, TripleExp>> items;
        mpz_class pc = 1;
        for (unsigned c = 0; pc < top; ++c, pc *= cfg.primes[2]) {
            mpz_class pbc = pc;
            for (unsigned b = 0; pbc < top; ++b, pbc *= cfg.primes[1]) {
                mpz_class v = pbc;
                for (unsigned a = 0; v < top; ++a, v *= cfg.primes[0]) {
                    if (!cfg.require_bc_positive || (b > 0 && c > 0))
                        items.emplace_back(v, TripleExp{static_cast<std::uint16_t>(a),
                                                        static_cast<std::uint16_t>(b),
                                                        static_cast<std::uint16_t>(c)});
                }
            }
        }
        std::sort(items.begin(), items.end(),
                  [](const auto& l, const auto& r) { return l.first < r.first; });
        for (auto& [v, e] : items) {
            values.push_back(v);
            exps.push_back(e);
        }
    }
    return run_blocks(cfg.y_max, workers, [&](u64 lo, u64 hi, std::vector<Solution>& out) {
        scan_range_mpz(cfg.n, lo, hi, values, exps, out);
    });
}

std::map<unsigned, std::size_t> smooth_exponent_scan(unsigned n_max, std::uint64_t y_max,
                                                     unsigned worker_count) {
    if (n_max < 3) throw std::invalid_argument("smooth_exponent_scan: n_max must be >= 3");
    std::map<unsigned, std::size_t> counts;
    for (unsigned n = 3; n <= n_max; ++n) {
        unsigned rest = n;
        while (rest % 2 == 0) rest /= 2;
        while (rest % 3 == 0) rest /= 3;
        if (rest != 1) continue;
        counts[n] = enumerate_solutions(SearchConfig{n, y_max, false, worker_count}).size();
    }
    return counts;
}

TableDiscrepancies verify_table(const std::vector<Solution>& claimed,
                                const std::vector<Solution>& found, std::uint64_t oracle_y_max) {
    mpz_class y_dom(static_cast<unsigned long>(oracle_y_max));
    unsigned n = claimed.empty() ? (found.empty() ? 0 : found.front().n) : claimed.front().n;
    for (const auto& s : claimed) {
        if (s.n != n) throw std::invalid_argument("verify_table: mixed n in claimed list");
        if (s.y > y_dom)
            throw std::invalid_argument("verify_table: oracle bound " + y_dom.get_str() +
                                        " does not dominate claimed y = " + s.y.get_str());
    }
    for (const auto& s : found)
        if (s.n != n) throw std::invalid_argument("verify_table: mixed n in found list");

    std::vector<Solution> c = claimed, f = found;
    std::sort(c.begin(), c.end(), solution_less);
    std::sort(f.begin(), f.end(), solution_less);

    TableDiscrepancies rep;
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] == c[i - 1]) rep.duplicate_claims.push_back(c[i]);
    c.erase(std::unique(c.begin(), c.end()), c.end());

    std::set_difference(c.begin(), c.end(), f.begin(), f.end(),
                        std::back_inserter(rep.claimed_not_found), solution_less);
    std::set_difference(f.begin(), f.end(), c.begin(), c.end(),
                        std::back_inserter(rep.found_not_claimed), solution_less);
    return rep;
}

}  // namespace xyn
