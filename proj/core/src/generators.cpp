#include "graphbounds/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <numeric>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "graphbounds/errors.hpp"
#include "graphbounds/parallel.hpp"
#include "graphbounds/rng.hpp"

namespace graphbounds {

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InvalidProbability("edge probability " + std::to_string(p) +
                                 " outside [0, 1]");
    }
    if (n < 0) throw IndexOutOfRange("vertex count must be nonnegative");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (rng.next_unit() < p) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edge_list(n, edges);
}

namespace {

// Truncated power law with density proportional to x^-tau on [xmin, xmax],
// sampled by inverse CDF and discretized by rounding to the nearest integer.
struct TruncatedPowerLaw {
    double tau = 2.0;
    double xmin = 1.0;
    double xmax = 2.0;

    double cdf(double x) const {
        if (x <= xmin) return 0.0;
        if (x >= xmax) return 1.0;
        if (tau == 1.0) return std::log(x / xmin) / std::log(xmax / xmin);
        const double a = std::pow(xmin, 1.0 - tau);
        const double b = std::pow(xmax, 1.0 - tau);
        return (a - std::pow(x, 1.0 - tau)) / (a - b);
    }

    double quantile(double u) const {
        if (tau == 1.0) return xmin * std::pow(xmax / xmin, u);
        const double a = std::pow(xmin, 1.0 - tau);
        const double b = std::pow(xmax, 1.0 - tau);
        return std::pow(a - u * (a - b), 1.0 / (1.0 - tau));
    }

    int sample_int(Rng& rng) const {
        const double y = quantile(rng.next_unit());
        const long long k = std::llround(y);
        const long long lo = std::llround(std::ceil(xmin - 0.5));
        const long long hi = std::llround(std::floor(xmax + 0.5));
        return static_cast<int>(std::clamp(k, std::max(1LL, lo), hi));
    }

    // Exact mean of the rounded variable, from CDF differences.
    double discrete_mean() const {
        const int lo = std::max(1, static_cast<int>(std::llround(std::ceil(xmin - 0.5))));
        const int hi = static_cast<int>(std::llround(std::floor(xmax + 0.5)));
        double mean = 0.0;
        for (int k = lo; k <= hi; ++k) {
            const double below = cdf(std::max(static_cast<double>(k) - 0.5, xmin));
            const double above = cdf(std::min(static_cast<double>(k) + 0.5, xmax));
            if (above > below) mean += static_cast<double>(k) * (above - below);
        }
        return mean;
    }
};

// Searches the continuous lower cutoff so the discretized mean matches the
// target. The mean is monotone increasing in the cutoff.
TruncatedPowerLaw solve_degree_law(double tau, double target, int max_degree) {
    TruncatedPowerLaw law{tau, 1.0, static_cast<double>(max_degree)};
    const double reachable_min = law.discrete_mean();
    if (reachable_min >= target) {
        if (reachable_min > 1.1 * target) {
            throw Infeasible("no power-law cutoff reaches mean " + std::to_string(target) +
                             " with exponent " + std::to_string(tau) + " and max degree " +
                             std::to_string(max_degree));
        }
        return law;
    }
    double lo = 1.0, hi = static_cast<double>(max_degree);
    for (int iter = 0; iter < 100; ++iter) {
        law.xmin = 0.5 * (lo + hi);
        if (law.discrete_mean() < target) {
            lo = law.xmin;
        } else {
            hi = law.xmin;
        }
    }
    law.xmin = 0.5 * (lo + hi);
    return law;
}

void validate_lfr(const LfrParams& p) {
    if (p.n < 2) throw Infeasible("lfr needs n >= 2");
    if (!(p.mu > 0.0 && p.mu < 1.0)) throw Infeasible("mu must lie strictly in (0, 1)");
    if (!(p.tau_degree > 0.0) || !(p.tau_community > 0.0)) {
        throw Infeasible("power-law exponents must be positive");
    }
    const int max_degree = p.max_degree > 0 ? p.max_degree : p.n / 2;
    if (!(p.avg_degree >= 1.0) || p.avg_degree > static_cast<double>(max_degree) ||
        max_degree >= p.n) {
        throw Infeasible("need 1 <= avg_degree <= max_degree < n");
    }
}

}  // namespace

std::vector<int> sample_power_law_degrees(int n, double tau, double avg_degree,
                                          int max_degree, std::uint64_t seed) {
    if (n < 1) throw Infeasible("need at least one vertex");
    if (!(tau > 0.0)) throw Infeasible("exponent must be positive");
    if (!(avg_degree >= 1.0) || avg_degree > static_cast<double>(max_degree)) {
        throw Infeasible("need 1 <= avg_degree <= max_degree");
    }
    const TruncatedPowerLaw law = solve_degree_law(tau, avg_degree, max_degree);
    Rng rng(seed);
    std::vector<int> degrees(static_cast<std::size_t>(n));
    // redraw whole sequences until the sampled mean lands inside the band
    constexpr int kMaxRounds = 200;
    for (int round = 0; round < kMaxRounds; ++round) {
        long long sum = 0;
        for (auto& k : degrees) {
            k = law.sample_int(rng);
            sum += k;
        }
        const double mean = static_cast<double>(sum) / static_cast<double>(n);
        if (std::fabs(mean - avg_degree) <= 0.1 * avg_degree) {
            if (sum % 2 != 0) {
                auto largest = std::max_element(degrees.begin(), degrees.end());
                --*largest;
            }
            return degrees;
        }
    }
    throw Infeasible("sampled degree mean failed to reach " + std::to_string(avg_degree) +
                     " within 10% after " + std::to_string(kMaxRounds) + " rounds");
}

std::vector<int> sample_community_sizes(int n, double tau, int min_community,
                                        int max_community, std::uint64_t seed) {
    if (min_community > n) {
        throw Infeasible("min_community " + std::to_string(min_community) + " exceeds n = " +
                         std::to_string(n));
    }
    if (min_community < 1 || min_community > max_community || max_community > n) {
        throw Infeasible("need 1 <= min_community <= max_community <= n");
    }
    Rng rng(seed);
    std::vector<int> sizes;
    if (min_community == max_community) {
        // degenerate support; no randomness to draw
        if (n % min_community != 0) {
            throw Infeasible("community size " + std::to_string(min_community) +
                             " does not tile " + std::to_string(n) + " vertices");
        }
        sizes.assign(static_cast<std::size_t>(n / min_community), min_community);
        return sizes;
    }
    const TruncatedPowerLaw law{tau, static_cast<double>(min_community),
                                static_cast<double>(max_community)};
    int total = 0;
    while (total < n) {
        const int size = std::clamp(law.sample_int(rng), min_community, max_community);
        sizes.push_back(size);
        total += size;
    }
    if (total > n) {
        const int trimmed = sizes.back() - (total - n);
        if (trimmed >= min_community) {
            sizes.back() = trimmed;
        } else {
            // drop the tail community and hand its quota to the others
            sizes.pop_back();
            int deficit = n - std::accumulate(sizes.begin(), sizes.end(), 0);
            while (deficit > 0) {
                bool progressed = false;
                for (auto& size : sizes) {
                    if (deficit == 0) break;
                    if (size < max_community) {
                        ++size;
                        --deficit;
                        progressed = true;
                    }
                }
                if (!progressed) {
                    throw Infeasible("community sizes cannot absorb the trimmed remainder");
                }
            }
        }
    }
    return sizes;
}

namespace {

std::uint64_t edge_key(int u, int v, int n) {
    const int a = std::min(u, v), b = std::max(u, v);
    return static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(n) +
           static_cast<std::uint64_t>(b);
}

// Configuration-model matching of the given stub multiset, followed by local
// rewiring that swaps endpoints between a conflicting pair and a random other
// pair. Self-loops and duplicates (including duplicates of `existing` edges)
// are hard conflicts and must be rewired away; same-community pairs are soft
// conflicts that get rewired on a best-effort basis and accepted otherwise,
// because community stub sums need not balance exactly. Returns false when
// hard conflicts survive every retry round.
bool match_stubs(const std::vector<int>& stub_owners, int n, Rng& rng,
                 const std::vector<int>& community,  // empty: no community test
                 const std::unordered_set<std::uint64_t>& existing,
                 std::vector<std::pair<int, int>>& out) {
    std::vector<int> stubs = stub_owners;
    auto hard = [&](int u, int v, const std::unordered_set<std::uint64_t>& seen) {
        if (u == v) return true;
        const std::uint64_t key = edge_key(u, v, n);
        return existing.contains(key) || seen.contains(key);
    };
    auto soft = [&](int u, int v) {
        return !community.empty() && community[static_cast<std::size_t>(u)] ==
                                         community[static_cast<std::size_t>(v)];
    };
    constexpr int kShuffleRounds = 24;
    for (int round = 0; round < kShuffleRounds; ++round) {
        shuffle(stubs, rng);
        std::vector<std::pair<int, int>> edges;
        edges.reserve(stubs.size() / 2);
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            edges.emplace_back(stubs[i], stubs[i + 1]);
        }
        std::unordered_set<std::uint64_t> seen;  // keys of clean matched edges
        std::vector<std::size_t> bad;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const auto [u, v] = edges[e];
            if (hard(u, v, seen) || soft(u, v)) {
                bad.push_back(e);
            } else {
                seen.insert(edge_key(u, v, n));
            }
        }
        const std::uint64_t initial_budget = 200 * (bad.size() + 4) + 2000;
        std::uint64_t budget = initial_budget;
        while (!bad.empty() && budget-- > 0) {
            // once the strict half of the budget is spent, allow swaps whose
            // results are soft (community stub sums need not balance, so some
            // hard conflicts are only fixable through a soft result)
            const bool relaxed = budget < initial_budget / 2;
            const std::size_t bad_slot =
                static_cast<std::size_t>(rng.next_below(bad.size()));
            const std::size_t e = bad[bad_slot];
            const std::size_t other =
                static_cast<std::size_t>(rng.next_below(edges.size()));
            if (other == e) continue;
            const auto [a, b] = edges[e];
            const auto [c, d] = edges[other];
            auto other_slot_it = std::find(bad.begin(), bad.end(), other);
            const bool other_bad = other_slot_it != bad.end();
            if (!other_bad) seen.erase(edge_key(c, d, n));
            auto blocked = [&](int x, int y) {
                return hard(x, y, seen) || (!relaxed && soft(x, y));
            };
            bool fixed = false;
            for (int variant = 0; variant < 2 && !fixed; ++variant) {
                const int p = variant == 0 ? c : d;
                const int q = variant == 0 ? d : c;
                if (blocked(a, p)) continue;
                seen.insert(edge_key(a, p, n));
                if (blocked(b, q)) {
                    seen.erase(edge_key(a, p, n));
                    continue;
                }
                seen.insert(edge_key(b, q, n));
                edges[e] = {a, p};
                edges[other] = {b, q};
                fixed = true;
            }
            if (fixed) {
                // remove e (and other, when it was bad) from the worklist
                const std::size_t other_slot =
                    other_bad ? static_cast<std::size_t>(other_slot_it - bad.begin())
                              : bad.size();
                bad[bad_slot] = bad.back();
                bad.pop_back();
                if (other_bad) {
                    const std::size_t slot =
                        other_slot < bad.size() && bad[other_slot] == other
                            ? other_slot
                            : static_cast<std::size_t>(
                                  std::find(bad.begin(), bad.end(), other) - bad.begin());
                    if (slot < bad.size()) {
                        bad[slot] = bad.back();
                        bad.pop_back();
                    }
                }
            } else if (!other_bad) {
                seen.insert(edge_key(c, d, n));
            }
        }
        // accept soft leftovers; any hard leftover forces another round
        bool hard_leftover = false;
        for (std::size_t e : bad) {
            const auto [u, v] = edges[e];
            if (hard(u, v, seen)) {
                hard_leftover = true;
                break;
            }
            seen.insert(edge_key(u, v, n));
        }
        if (!hard_leftover) {
            out = std::move(edges);
            return true;
        }
    }
    return false;
}

// Erdos-Gallai: a nonincreasing degree sequence is realizable by a simple
// graph iff the sum is even and every prefix inequality holds.
bool graphical(std::vector<int> degrees) {
    std::sort(degrees.rbegin(), degrees.rend());
    const int s = static_cast<int>(degrees.size());
    long long sum = 0;
    for (int d : degrees) sum += d;
    if (sum % 2 != 0) return false;
    long long prefix = 0;
    for (int k = 1; k <= s; ++k) {
        prefix += degrees[static_cast<std::size_t>(k - 1)];
        long long tail = 0;
        for (int i = k; i < s; ++i) {
            tail += std::min(degrees[static_cast<std::size_t>(i)], k);
        }
        if (prefix > static_cast<long long>(k) * (k - 1) + tail) return false;
    }
    return true;
}

// Wires a degree sequence inside one community (local indices 0..s-1). When
// the requested density exceeds 1/2, the complement sequence is wired instead
// and inverted, which keeps stub matching in its sparse regime.
bool wire_community(const std::vector<int>& intra_degree, Rng& rng,
                    std::vector<std::pair<int, int>>& out) {
    const int s = static_cast<int>(intra_degree.size());
    const long long stub_sum =
        std::accumulate(intra_degree.begin(), intra_degree.end(), 0LL);
    // stub_sum is twice the requested edge count
    const long long max_edges = static_cast<long long>(s) * (s - 1) / 2;
    const bool use_complement = stub_sum > max_edges;
    std::vector<int> stubs;
    std::vector<int> degrees(intra_degree);
    if (use_complement) {
        for (int v = 0; v < s; ++v) degrees[static_cast<std::size_t>(v)] = s - 1 - degrees[static_cast<std::size_t>(v)];
    }
    for (int v = 0; v < s; ++v) {
        for (int k = 0; k < degrees[static_cast<std::size_t>(v)]; ++k) stubs.push_back(v);
    }
    std::vector<std::pair<int, int>> matched;
    if (!stubs.empty() && !match_stubs(stubs, s, rng, {}, {}, matched)) return false;
    if (!use_complement) {
        out = std::move(matched);
        return true;
    }
    std::unordered_set<std::uint64_t> absent;
    for (const auto& [u, v] : matched) absent.insert(edge_key(u, v, s));
    out.clear();
    for (int u = 0; u < s; ++u) {
        for (int v = u + 1; v < s; ++v) {
            if (!absent.contains(edge_key(u, v, s))) out.emplace_back(u, v);
        }
    }
    return true;
}

}  // namespace

Graph lfr(const LfrParams& params) { return lfr_detailed(params).graph; }

LfrResult lfr_detailed(const LfrParams& params) {
    validate_lfr(params);
    const int n = params.n;
    const int max_degree = params.max_degree > 0 ? params.max_degree : n / 2;

    Rng rng(splitmix64(params.seed));
    std::vector<int> degrees = sample_power_law_degrees(
        n, params.tau_degree, params.avg_degree, max_degree, rng.next_u64());

    // split each degree into an intra and an inter share; round to nearest so
    // the vertex-averaged intra fraction stays centered on 1 - mu
    std::vector<int> intra(static_cast<std::size_t>(n)), inter(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        const int k = degrees[static_cast<std::size_t>(v)];
        const int within = std::clamp(
            static_cast<int>(std::llround((1.0 - params.mu) * k)), 0, k);
        intra[static_cast<std::size_t>(v)] = within;
        inter[static_cast<std::size_t>(v)] = k - within;
    }
    const int max_intra = *std::max_element(intra.begin(), intra.end());

    int min_community = params.min_community > 0 ? params.min_community
                                                 : std::max(8, max_intra + 1);
    int max_community = params.max_community > 0 ? params.max_community : n / 2;
    min_community = std::min(min_community, n);
    if (min_community > max_community) {
        throw Infeasible("community bounds [" + std::to_string(min_community) + ", " +
                         std::to_string(max_community) + "] are empty");
    }
    const std::vector<int> sizes = sample_community_sizes(
        n, params.tau_community, min_community, max_community, rng.next_u64());
    const int communities = static_cast<int>(sizes.size());

    if (communities == 1) {
        // a single community cannot host inter edges; fold them back
        for (int v = 0; v < n; ++v) {
            intra[static_cast<std::size_t>(v)] += inter[static_cast<std::size_t>(v)];
            inter[static_cast<std::size_t>(v)] = 0;
        }
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (intra[static_cast<std::size_t>(a)] != intra[static_cast<std::size_t>(b)]) {
            return intra[static_cast<std::size_t>(a)] > intra[static_cast<std::size_t>(b)];
        }
        return a < b;
    });

    constexpr int kPlacementRounds = 64;
    std::string failure = "could not place every vertex into a community large "
                          "enough for its intra-degree";
    for (int round = 0; round < kPlacementRounds; ++round) {
        // placement: vertices in decreasing intra-degree order, each into a
        // random community that still has a free slot and is large enough for
        // its intra-degree
        std::vector<int> member_of(static_cast<std::size_t>(n), -1);
        std::vector<int> fill(static_cast<std::size_t>(communities), 0);
        bool placed_all = true;
        for (int v : order) {
            std::vector<int> candidates;
            for (int c = 0; c < communities; ++c) {
                if (fill[static_cast<std::size_t>(c)] < sizes[static_cast<std::size_t>(c)] &&
                    sizes[static_cast<std::size_t>(c)] > intra[static_cast<std::size_t>(v)]) {
                    candidates.push_back(c);
                }
            }
            if (candidates.empty()) {
                placed_all = false;
                break;
            }
            const int c =
                candidates[static_cast<std::size_t>(rng.next_below(candidates.size()))];
            member_of[static_cast<std::size_t>(v)] = c;
            ++fill[static_cast<std::size_t>(c)];
        }
        if (!placed_all) continue;

        // the parity fix below may move stubs; work on per-round copies
        std::vector<int> round_intra = intra;
        std::vector<int> round_inter = inter;
        std::vector<std::vector<int>> members(static_cast<std::size_t>(communities));
        for (int v = 0; v < n; ++v) {
            members[static_cast<std::size_t>(member_of[static_cast<std::size_t>(v)])]
                .push_back(v);
        }
        // per-community stub parity: move one stub from intra to inter on the
        // member with the largest intra-degree
        bool parity_ok = true;
        for (auto& community_members : members) {
            long long sum = 0;
            for (int v : community_members) sum += round_intra[static_cast<std::size_t>(v)];
            if (sum % 2 != 0) {
                int pick = community_members.front();
                for (int v : community_members) {
                    if (round_intra[static_cast<std::size_t>(v)] >
                        round_intra[static_cast<std::size_t>(pick)]) {
                        pick = v;
                    }
                }
                if (communities == 1 || round_intra[static_cast<std::size_t>(pick)] == 0) {
                    parity_ok = false;
                    break;
                }
                --round_intra[static_cast<std::size_t>(pick)];
                ++round_inter[static_cast<std::size_t>(pick)];
            }
        }
        if (!parity_ok) {
            failure = "cannot fix intra-stub parity";
            continue;
        }

        // a placement whose intra sequence is not graphical in some community
        // can never be wired into a simple graph; redraw the placement
        bool all_graphical = true;
        for (const auto& community_members : members) {
            std::vector<int> local_degrees;
            local_degrees.reserve(community_members.size());
            for (int v : community_members) {
                local_degrees.push_back(round_intra[static_cast<std::size_t>(v)]);
            }
            if (!graphical(local_degrees)) {
                all_graphical = false;
                break;
            }
        }
        if (!all_graphical) {
            failure = "intra-degree sequence not graphical for any tried placement";
            continue;
        }

        std::vector<std::pair<int, int>> edges;
        bool wired = true;
        for (const auto& community_members : members) {
            std::vector<int> local_degrees;
            local_degrees.reserve(community_members.size());
            for (int v : community_members) {
                local_degrees.push_back(round_intra[static_cast<std::size_t>(v)]);
            }
            std::vector<std::pair<int, int>> local_edges;
            if (!wire_community(local_degrees, rng, local_edges)) {
                wired = false;
                break;
            }
            for (const auto& [a, b] : local_edges) {
                edges.emplace_back(community_members[static_cast<std::size_t>(a)],
                                   community_members[static_cast<std::size_t>(b)]);
            }
        }
        if (!wired) {
            failure = "intra-community rewiring exhausted its retry budget";
            continue;
        }

        std::vector<int> inter_stubs;
        for (int v = 0; v < n; ++v) {
            for (int k = 0; k < round_inter[static_cast<std::size_t>(v)]; ++k) {
                inter_stubs.push_back(v);
            }
        }
        if (!inter_stubs.empty()) {
            std::unordered_set<std::uint64_t> existing;
            existing.reserve(edges.size() * 2);
            for (const auto& [u, v] : edges) existing.insert(edge_key(u, v, n));
            std::vector<std::pair<int, int>> inter_edges;
            if (!match_stubs(inter_stubs, n, rng, member_of, existing, inter_edges)) {
                failure = "inter-community rewiring exhausted its retry budget";
                continue;
            }
            edges.insert(edges.end(), inter_edges.begin(), inter_edges.end());
        }

        LfrResult result;
        result.graph = Graph::from_edge_list(n, edges);
        result.community = std::move(member_of);
        std::vector<int> intra_incident(static_cast<std::size_t>(n), 0);
        for (const auto& [u, v] : result.graph.edges()) {
            if (result.community[static_cast<std::size_t>(u)] ==
                result.community[static_cast<std::size_t>(v)]) {
                ++intra_incident[static_cast<std::size_t>(u)];
                ++intra_incident[static_cast<std::size_t>(v)];
            }
        }
        double fraction_sum = 0.0;
        int with_edges = 0;
        for (int v = 0; v < n; ++v) {
            const int deg = result.graph.degree(v);
            if (deg == 0) continue;
            fraction_sum += static_cast<double>(intra_incident[static_cast<std::size_t>(v)]) /
                            static_cast<double>(deg);
            ++with_edges;
        }
        result.intra_fraction = with_edges > 0 ? fraction_sum / with_edges : 0.0;
        return result;
    }
    throw WiringFailure(failure);
}

std::uint64_t sweep_child_seed(std::uint64_t master_seed, double avg_degree,
                               int realization) {
    std::uint64_t h = splitmix64(master_seed);
    std::uint64_t degree_bits;
    static_assert(sizeof(degree_bits) == sizeof(avg_degree));
    std::memcpy(&degree_bits, &avg_degree, sizeof(degree_bits));
    h = splitmix64(h ^ degree_bits);
    h = splitmix64(h ^ static_cast<std::uint64_t>(realization));
    return h;
}

std::vector<SweepCell> run_sweep(const SweepConfig& config) {
    if (config.realizations < 1) throw Infeasible("realizations must be >= 1");
    if (config.degrees.empty()) throw Infeasible("degree list must not be empty");
    // output ordering contract: degree ascending, realization ascending,
    // independent of both the input order and the execution order
    std::vector<double> degrees = config.degrees;
    std::sort(degrees.begin(), degrees.end());
    std::vector<SweepCell> cells(degrees.size() *
                                 static_cast<std::size_t>(config.realizations));
    parallel_chunks(cells.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const std::size_t degree_index = i / static_cast<std::size_t>(config.realizations);
            const int realization = static_cast<int>(i % static_cast<std::size_t>(config.realizations));
            SweepCell& cell = cells[i];
            cell.avg_degree = degrees[degree_index];
            cell.realization = realization;
            cell.seed = sweep_child_seed(config.master_seed, cell.avg_degree, realization);
            LfrParams params = config.base;
            params.avg_degree = cell.avg_degree;
            params.seed = cell.seed;
            try {
                const Graph g = lfr(params);
                const GraphAnalysis analysis = analyze_graph(g);
                cell.metrics = analysis.metrics;
                cell.bounds = analysis.bounds;
                cell.ok = true;
            } catch (const Error& e) {
                cell.ok = false;
                cell.error = e.what();
            }
        }
    });
    return cells;
}

}  // namespace graphbounds
