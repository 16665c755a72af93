#include "wps/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <thread>
#include <utility>

#include "wps/field.hpp"
#include "wps/numtheory.hpp"

namespace wps {
namespace {

// Deterministic across platforms, unlike the standard distributions.
std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

struct SweepCell {
    std::uint32_t q;
    std::vector<std::uint32_t> weights;
    std::size_t i;
};

// Shared, thread-safe store of fields and censuses. The first caller of a
// missing census computes it after releasing the map lock; concurrent
// callers of the same key wait on its future.
class CensusCache {
public:
    explicit CensusCache(std::uint64_t budget) : budget_(budget) {}

    std::shared_ptr<const Field> field(std::uint32_t q) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = fields_.find(q);
        if (it == fields_.end()) {
            auto [p, k] = factor_prime_power(q);
            it = fields_.emplace(q, make_field(p, k)).first;
        }
        return it->second;
    }

    std::shared_ptr<const SpaceCensus> census(std::uint32_t q,
                                              const std::vector<std::uint32_t>& weights) {
        const std::pair<std::uint32_t, std::vector<std::uint32_t>> key{q, weights};
        std::promise<std::shared_ptr<const SpaceCensus>> promise;
        std::shared_future<std::shared_ptr<const SpaceCensus>> future;
        bool creator = false;
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = censuses_.find(key);
            if (it == censuses_.end()) {
                creator = true;
                future = promise.get_future().share();
                censuses_.emplace(key, future);
            } else {
                future = it->second;
            }
        }
        if (creator) {
            try {
                auto f = field(q);
                promise.set_value(std::make_shared<const SpaceCensus>(
                    enumerate_space(f, Weights(weights), budget_)));
            } catch (...) {
                promise.set_exception(std::current_exception());
            }
        }
        return future.get();
    }

private:
    std::uint64_t budget_;
    std::mutex mu_;
    std::map<std::uint32_t, std::shared_ptr<const Field>> fields_;
    std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>,
             std::shared_future<std::shared_ptr<const SpaceCensus>>>
        censuses_;
};

std::size_t census_index(const SpaceCensus& census, const WpsPoint& P) {
    const auto& pts = census.points();
    auto it = std::lower_bound(
        pts.begin(), pts.end(), P,
        [](const WpsPoint& a, const WpsPoint& b) { return a.coords() < b.coords(); });
    if (it == pts.end() || !(it->coords() == P.coords())) {
        throw std::logic_error("image point missing from the target census");
    }
    return static_cast<std::size_t>(it - pts.begin());
}

// Evaluates every chart-i point of one (q, weights, i) cell. The enumerated
// count comes from a single pass over the source census, bucketed by image.
std::vector<FiberReport> process_cell(CensusCache& cache, const SweepCell& cell) {
    const Weights target(cell.weights);
    auto T = cache.census(cell.q, cell.weights);
    auto S = cache.census(cell.q, source_weights(target, cell.i).values());
    const bool hyp = hypothesis_check(target, cell.i, cell.q);
    const std::uint64_t old_count = fiber_formula_old(target[cell.i], cell.q);

    std::vector<std::uint32_t> image_buckets(T->size(), 0);
    for (const WpsPoint& Q : S->points()) {
        image_buckets[census_index(*T, pi_map(target, cell.i, Q))] += 1;
    }

    std::vector<FiberReport> out;
    out.reserve(T->chart(cell.i).size());
    for (std::uint32_t idx : T->chart(cell.i)) {
        const WpsPoint& P = T->points()[idx];
        FiberReport r{target, cell.i, P, 0, 0, 0, 0, 0, false};
        r.formula_count = fiber_formula(target, cell.i, P);
        std::vector<std::size_t> supp = P.support();
        std::vector<std::size_t> supp_minus_i;
        for (std::size_t j : supp) {
            if (j != cell.i) supp_minus_i.push_back(j);
        }
        r.delta_P = support_weight_gcd(target, supp);
        r.delta_iP = support_weight_gcd(target, supp_minus_i);
        r.brute_count = image_buckets[idx];
        r.old_formula_count = old_count;
        r.hypothesis_holds = hyp;
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace

SweepReport run_sweep(const SweepConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    if (config.q_list.empty()) throw std::invalid_argument("q_list must not be empty");
    if (config.n_min < 1 || config.n_max < config.n_min) {
        throw std::invalid_argument("need 1 <= n_min <= n_max");
    }
    if (config.weight_max < 1) throw std::invalid_argument("weight_max must be positive");
    if (config.mode == SweepConfig::Mode::sampled && config.samples < 1) {
        throw std::invalid_argument("sampled mode needs a positive sample count");
    }

    std::vector<std::uint32_t> qs = config.q_list;
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());

    CensusCache cache(config.budget);
    for (std::uint32_t q : qs) cache.field(q); // validates every q up front

    std::vector<SweepCell> cells;
    for (std::uint32_t q : qs) {
        for (std::size_t n = config.n_min; n <= config.n_max; ++n) {
            std::vector<std::uint32_t> w(n + 1, 1);
            for (;;) {
                for (std::size_t i = 0; i <= n; ++i) cells.push_back({q, w, i});
                std::size_t j = w.size();
                while (j-- > 0) {
                    if (w[j] < config.weight_max) {
                        ++w[j];
                        break;
                    }
                    w[j] = 1;
                }
                if (j == static_cast<std::size_t>(-1)) break;
            }
        }
    }

    if (config.mode == SweepConfig::Mode::sampled) {
        std::vector<std::size_t> order(cells.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::uint64_t state = config.seed;
        for (std::size_t a = order.size(); a > 1; --a) {
            std::swap(order[a - 1], order[splitmix64(state) % a]);
        }
        std::vector<std::size_t> chosen;
        std::uint64_t total = 0;
        for (std::size_t idx : order) {
            const SweepCell& c = cells[idx];
            std::uint64_t chart_size = cache.census(c.q, c.weights)->chart(c.i).size();
            if (chart_size == 0) continue;
            chosen.push_back(idx);
            total += chart_size;
            if (total >= config.samples) break;
        }
        std::sort(chosen.begin(), chosen.end());
        std::vector<SweepCell> subset;
        subset.reserve(chosen.size());
        for (std::size_t idx : chosen) subset.push_back(std::move(cells[idx]));
        cells = std::move(subset);
    }

    std::vector<std::vector<FiberReport>> results(cells.size());
    std::vector<std::exception_ptr> errors(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= cells.size()) return;
            try {
                results[idx] = process_cell(cache, cells[idx]);
            } catch (...) {
                errors[idx] = std::current_exception();
            }
        }
    };

    const unsigned jobs = std::max(1u, config.jobs);
    if (jobs == 1 || cells.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        const unsigned spawn = static_cast<unsigned>(
            std::min<std::size_t>(jobs, cells.size()));
        pool.reserve(spawn);
        for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    for (const std::exception_ptr& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    SweepReport report;
    std::size_t case_count = 0;
    for (const auto& r : results) case_count += r.size();
    report.cases.reserve(case_count);
    for (auto& r : results) {
        for (FiberReport& one : r) report.cases.push_back(std::move(one));
    }
    for (const FiberReport& r : report.cases) {
        report.totals.cases += 1;
        if (r.brute_count == r.formula_count) {
            report.totals.matches += 1;
        } else {
            report.totals.mismatches += 1;
            report.mismatches.push_back(r);
        }
        if (r.brute_count != r.old_formula_count) report.totals.old_formula_mismatches += 1;
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

unsigned ell_adic_valuation(std::uint64_t ell, std::uint64_t m) {
    if (!is_prime(ell)) throw std::invalid_argument("valuation base must be prime");
    if (m == 0) throw std::invalid_argument("valuation of zero is undefined");
    unsigned e = 0;
    while (m % ell == 0) {
        m /= ell;
        ++e;
    }
    return e;
}

ValuationCheck check_valuation_identity(std::uint64_t a, std::uint64_t d, std::uint64_t m) {
    if (a < 1 || d < 1 || m < 1) throw std::invalid_argument("operands must be positive");
    if (m > std::numeric_limits<std::uint64_t>::max() / d) {
        throw std::invalid_argument("operands too large");
    }
    ValuationCheck check;
    check.holds = std::gcd(a, m * d) / std::gcd(a, d) == std::gcd(a, m);

    std::vector<std::uint64_t> primes;
    for (std::uint64_t value : {a, d, m}) {
        for (const auto& [ell, e] : prime_factors(value)) primes.push_back(ell);
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

    bool all_match = true;
    for (std::uint64_t ell : primes) {
        ValuationWitness w;
        w.ell = ell;
        w.alpha = ell_adic_valuation(ell, a);
        w.kappa = ell_adic_valuation(ell, m);
        w.delta = ell_adic_valuation(ell, d);
        w.lhs = static_cast<long long>(std::min(w.alpha, w.kappa + w.delta)) -
                static_cast<long long>(std::min(w.alpha, w.delta));
        w.rhs = static_cast<long long>(std::min(w.alpha, w.kappa));
        all_match = all_match && w.lhs == w.rhs;
        check.witnesses.push_back(w);
    }
    if (all_match != check.holds) {
        throw std::logic_error("per-prime witnesses disagree with the gcd computation");
    }
    return check;
}

FiberReport reproduce_counterexample(std::uint32_t a0, std::uint32_t a1, std::uint64_t budget) {
    auto field = make_field(5, 1);
    const Weights target({a0, a1, 2, 4});
    const std::vector<FieldElement> raw{field->zero(), field->zero(), field->element(1),
                                        field->element(2)};
    const WpsPoint P = normalize(field, target, raw);
    FiberReport report = build_fiber_report(target, 2, P, budget);
    if (a0 == 1 && a1 == 1) {
        if (report.brute_count != 1 || report.formula_count != 1 ||
            report.old_formula_count != 2) {
            throw VerificationFailure("separating instance did not produce counts 1/1/2");
        }
    } else if (report.brute_count != report.formula_count) {
        throw VerificationFailure("enumerated fiber size disagrees with the corrected count");
    }
    return report;
}

GaloisCheck galois_crosscheck(const Weights& weights, std::uint32_t p, std::uint32_t k,
                              std::uint64_t budget) {
    auto small = make_field(p, k);
    auto big = make_field(p, 2 * k);
    GaloisCheck out;
    out.base_count = count_points(small, weights, budget);
    const SpaceCensus big_census = enumerate_space(big, weights, budget);
    std::vector<FieldElement> image(weights.size(), big->zero());
    for (const WpsPoint& P : big_census.points()) {
        for (std::size_t j = 0; j < weights.size(); ++j) {
            image[j] = big->frobenius(P.coords()[j], small->order());
        }
        if (normalize(big, weights, image).coords() == P.coords()) out.fixed_count += 1;
    }
    out.equal = out.base_count == out.fixed_count;
    return out;
}

} // namespace wps
