#include "galkit/theorems.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>

#include "galkit/group_io.hpp"
#include "galkit/number_theory.hpp"
#include "galkit/products.hpp"

namespace galkit {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
  Clock::time_point start = Clock::now();
  void stop(CheckReport &r) const { r.elapsed = Clock::now() - start; }
};

std::uint64_t factorial(std::size_t d) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= d; ++i) f *= i;
  return f;
}

void require_catalog_degree(std::size_t d) {
  if (d < 2 || d > 7)
    fail(ErrorCode::invalid_argument,
         "transitive catalogs cover degrees 2..7, got " + std::to_string(d));
}

void require_prime(std::uint64_t p, const char *what) {
  if (!is_prime(p))
    fail(ErrorCode::invalid_argument, std::string(what) + " must be prime, got " + std::to_string(p));
}

nlohmann::json describe(const PermutationGroup &g) {
  auto j = group_to_json(g);
  j["order"] = bigint_to_json(g.order());
  return j;
}

std::vector<std::uint64_t> primes_between_half_and(std::size_t d) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p < d; ++p)
    if (2 * p > d && is_prime(p)) out.push_back(p);
  return out;
}

/// Points of the cycle of `x` through `start`, in the order x visits them.
std::vector<Point> cycle_through(const Permutation &x, Point start) {
  std::vector<Point> order{start};
  for (Point y = x[start]; y != start; y = x[y]) order.push_back(y);
  return order;
}

PermutationGroup join(const PermutationGroup &a, const PermutationGroup &b) {
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return PermutationGroup(std::move(gens));
}

}  // namespace

const TransitiveCatalog &transitive_groups(std::size_t d) {
  require_catalog_degree(d);
  static std::mutex mutex;
  static std::map<std::size_t, TransitiveCatalog> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(d); it != cache.end()) return it->second;
  auto sym = standard_group(StandardFamily::symmetric, d);
  TransitiveCatalog cat;
  cat.degree = d;
  cat.completeness = "exhaustive: all conjugacy classes of subgroups of S_" + std::to_string(d);
  for (auto &c : subgroup_classes(sym, factorial(d)))
    if (is_transitive(c.representative)) cat.classes.push_back(std::move(c.representative));
  std::stable_sort(cat.classes.begin(), cat.classes.end(),
                   [](const auto &a, const auto &b) { return a.order() < b.order(); });
  return cache.emplace(d, std::move(cat)).first->second;
}

CheckReport check_catalog(std::size_t d) {
  Timer timer;
  static const std::size_t published[] = {0, 1, 1, 2, 5, 5, 16, 7};
  const auto &cat = transitive_groups(d);
  CheckReport r;
  r.check_name = "catalog";
  r.params = {{"d", d}};
  auto sym = standard_group(StandardFamily::symmetric, d);
  nlohmann::json orders = nlohmann::json::array();
  for (std::size_t i = 0; i < cat.classes.size(); ++i) {
    const auto &g = cat.classes[i];
    orders.push_back(bigint_to_json(g.order()));
    if (g.degree() != d || !is_transitive(g)) {
      r.status = CheckStatus::fail;
      r.witness("not_transitive", describe(g));
    }
    for (std::size_t j = 0; j < i; ++j)
      if (cat.classes[j].order() == g.order() && conjugating_element(sym, cat.classes[j], g)) {
        r.status = CheckStatus::fail;
        r.witness("conjugate_pair", {describe(cat.classes[j]), describe(g)});
      }
  }
  r.witness("count", cat.classes.size());
  r.witness("published_count", published[d]);
  r.witness("orders", orders);
  r.witness("completeness", cat.completeness);
  if (cat.classes.size() != published[d]) r.status = CheckStatus::fail;
  timer.stop(r);
  return r;
}

CheckReport check_pcycle_lemma(std::size_t d, std::uint64_t p) {
  Timer timer;
  require_catalog_degree(d);
  require_prime(p, "p");
  if (2 * p <= d || p >= d)
    fail(ErrorCode::invalid_argument, "p must lie in (d/2, d)");
  CheckReport r;
  r.check_name = "pcycle";
  r.params = {{"d", d}, {"p", p}};
  const std::uint64_t sym_order = factorial(d);
  // For p > d/2 an element of order p is a single p-cycle, so a transitive
  // group contains a p-cycle exactly when p divides its order.
  nlohmann::json surviving = nlohmann::json::array();
  for (const auto &g : transitive_groups(d).classes) {
    if (g.order() % p != 0) continue;
    const bool big = g.order() == sym_order || g.order() == sym_order / 2;
    if (big) {
      surviving.push_back(describe(g));
    } else {
      r.status = CheckStatus::fail;
      r.witness("counterexample", describe(g));
    }
  }
  r.witness("classes_with_p_cycle", surviving);
  timer.stop(r);
  return r;
}

NoquotResult find_noquot_prime(std::size_t d) {
  Timer timer;
  require_catalog_degree(d);
  NoquotResult result;
  auto &r = result.report;
  r.check_name = "theorem1c";
  r.params = {{"d", d}};
  const auto &cat = transitive_groups(d);
  const std::uint64_t s = factorial(d), a = std::max<std::uint64_t>(s / 2, 1);
  for (auto p : primes_between_half_and(d)) {
    const std::string tag = "p=" + std::to_string(p);
    auto pc = check_pcycle_lemma(d, p);
    if (pc.status != CheckStatus::pass) {
      r.witness(tag + " rejected: p-cycle lemma", pc.witnesses.front().value);
      continue;
    }
    std::optional<PermutationGroup> quotient_witness;
    for (const auto &g : cat.classes)
      if (abelian_quotient_order(g) % p == 0) {
        quotient_witness = g;
        break;
      }
    if (quotient_witness) {
      auto w = describe(*quotient_witness);
      w["abelian_quotient_order"] = bigint_to_json(abelian_quotient_order(*quotient_witness));
      r.witness(tag + " rejected: C_p quotient", w);
      continue;
    }
    std::optional<std::pair<std::uint64_t, std::uint64_t>> ratio;
    for (auto big : {a, s})
      for (auto small : {std::uint64_t{1}, std::uint64_t{2}, a, s})
        if (big % small == 0 && big / small == p && !ratio) ratio = {big, small};
    if (ratio) {
      r.witness(tag + " rejected: order ratio",
                {{"R", ratio->first}, {"Q", ratio->second}});
      continue;
    }
    result.prime = p;
    break;
  }
  if (result.prime) {
    r.witness("prime", *result.prime);
  } else {
    r.status = CheckStatus::fail;
    r.witness("prime", "none");
  }
  timer.stop(r);
  return result;
}

CheckReport brute_check_noquot_pairs(std::size_t d, std::uint64_t p) {
  Timer timer;
  require_catalog_degree(d);
  require_prime(p, "p");
  if (d > 5)
    fail(ErrorCode::budget_exceeded, "pair products above degree 5 exceed the enumeration budget");
  CheckReport r;
  r.check_name = "noquot-pairs";
  r.params = {{"d", d}, {"p", p}};
  const auto &cat = transitive_groups(d).classes;
  std::size_t pairs = 0, products = 0;
  for (const auto &g1 : cat)
    for (const auto &g2 : cat) {
      ++pairs;
      for (const auto &s : enumerate_subdirect_products(g1, g2, 120)) {
        ++products;
        auto ab = abelian_quotient_order(s);
        if (ab % p == 0 && r.status == CheckStatus::pass) {
          r.status = CheckStatus::fail;
          auto w = describe(s);
          w["abelian_quotient_order"] = bigint_to_json(ab);
          w["factor_orders"] = {bigint_to_json(g1.order()), bigint_to_json(g2.order())};
          r.witness("counterexample", w);
        }
      }
    }
  r.witness("pairs", pairs);
  r.witness("subdirect_products", products);
  timer.stop(r);
  return r;
}

CheckReport check_goursat(const PermutationGroup &g1, const PermutationGroup &g2,
                          const AnalysisOptions &options) {
  Timer timer;
  CheckReport r;
  r.check_name = "goursat";
  r.params = {{"g1", group_to_json(g1)}, {"g2", group_to_json(g2)}};
  auto goursat = enumerate_subdirect_products(g1, g2, options.subgroup_bound);
  auto emb = direct_product({g1, g2});
  std::vector<PermutationGroup> brute;
  for (auto &s : enumerate_subgroups(emb.combined, options.subgroup_bound).members)
    if (is_subdirect(s, emb)) brute.push_back(std::move(s));
  sort_subgroups(brute, options.element_budget);
  r.witness("goursat_count", goursat.size());
  r.witness("brute_force_count", brute.size());
  if (goursat.size() != brute.size()) r.status = CheckStatus::fail;
  for (const auto &s : goursat)
    if (std::find(brute.begin(), brute.end(), s) == brute.end()) {
      r.status = CheckStatus::fail;
      r.witness("only_in_goursat", describe(s));
    }
  for (const auto &s : brute)
    if (std::find(goursat.begin(), goursat.end(), s) == goursat.end()) {
      r.status = CheckStatus::fail;
      r.witness("only_in_brute_force", describe(s));
    }
  // |S| = |G1| |G2| / |Q| with Q = G1/N1 = G2/N2, N_i the kernel of the
  // projection onto the other factor.
  std::vector<PermutationGroup> windows;
  for (std::size_t i = 0; i < 2; ++i) {
    std::vector<Permutation> gens;
    for (const auto &x : emb.factors[i].generators()) gens.push_back(emb.embed(i, x));
    windows.emplace_back(std::move(gens));
  }
  std::size_t fibord_ok = 0;
  for (const auto &s : goursat) {
    auto n1 = intersection(s, windows[0]), n2 = intersection(s, windows[1]);
    BigInt q1 = g1.order() / n1.order(), q2 = g2.order() / n2.order();
    if (q1 == q2 && s.order() * q1 == g1.order() * g2.order()) {
      ++fibord_ok;
    } else {
      r.status = CheckStatus::fail;
      auto w = describe(s);
      w["quotient_orders"] = {bigint_to_json(q1), bigint_to_json(q2)};
      r.witness("fibered_order_mismatch", w);
    }
  }
  r.witness("fibered_order_identity_holds", fibord_ok);
  timer.stop(r);
  return r;
}

CheckReport check_dpcp(std::uint64_t p, std::uint64_t n, const AnalysisOptions &options) {
  Timer timer;
  auto w = dpcp_group(p, n);
  CheckReport r;
  r.check_name = "dpcp";
  r.params = {{"p", p}, {"n", n}};
  auto overs = overgroups(w.group, w.h, options);
  std::optional<PermutationGroup> meet;
  std::size_t strict = 0;
  for (const auto &b : overs.members) {
    if (b == w.h) continue;
    ++strict;
    if (!b.contains(w.r_last)) {
      r.status = CheckStatus::fail;
      r.witness("overgroup_without_r_n", describe(b));
    }
    meet = meet ? intersection(*meet, b) : b;
  }
  r.witness("H", describe(w.h));
  r.witness("r_n", w.r_last.to_string());
  r.witness("strict_overgroups", strict);
  if (!meet) {
    r.status = CheckStatus::fail;
    r.witness("intersection", "no strict overgroups");
  } else {
    r.witness("intersection", describe(*meet));
    r.witness("intersection_order", bigint_to_json(meet->order()));
    if (meet->order() <= w.h.order()) {
      r.status = CheckStatus::fail;
      r.witness("intersection_equals_H", true);
    }
  }
  timer.stop(r);
  return r;
}

CheckReport check_extraspecial(std::uint64_t p, std::uint64_t n, std::uint64_t degree_budget,
                               const AnalysisOptions &options) {
  Timer timer;
  CheckReport r;
  r.check_name = "extraspecial";
  r.params = {{"p", p}, {"n", n}};
  auto cover = extraspecial_cover(p, n);
  if (n > 2) {
    r.status = CheckStatus::skipped;
    r.witness("reason", "subgroups of index < p^n are only enumerated for n <= 2");
    timer.stop(r);
    return r;
  }
  const auto &full = cover.product.combined;
  const auto &kernel = cover.kernel;
  PermutationGroup derived_n = join(derived_subgroup(full), kernel);

  if (n == 1) {
    // Index < p leaves only the whole group.
    const auto &e = full;
    auto subs = low_index_subgroups(e, p - 1, options, LowIndexMethod::automatic);
    r.witness("qualifying_subgroups", subs.members.size());
    r.witness("intersection_order", bigint_to_json(e.order()));
    r.witness("derived_order", bigint_to_json(derived_subgroup(e).order()));
    if (subs.members.size() != 1) r.status = CheckStatus::fail;
    timer.stop(r);
    return r;
  }

  // Index < p^2 means index p: the maximal subgroups, which are the
  // preimages of hyperplanes of the Frattini quotient F_p^4.
  std::vector<Permutation> basis;
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::size_t k : {1, 2})
      basis.push_back(cover.product.embed(i, cover.product.factors[i].generators()[k]));
  const std::size_t dim = basis.size();
  std::uint64_t vectors = 1;
  for (std::size_t j = 0; j < dim; ++j) vectors *= p;
  std::vector<PermutationGroup> maximal;
  std::vector<std::uint64_t> c(dim, 0);
  const BigInt expected_order = full.order() / p;
  bool orders_ok = true;
  for (std::uint64_t code = 1; code < vectors; ++code) {
    for (std::size_t j = 0, v = code; j < dim; ++j, v /= p) c[j] = v % p;
    std::size_t lead = 0;
    while (c[lead] == 0) ++lead;
    if (c[lead] != 1) continue;
    std::vector<Permutation> gens = kernel.generators();
    gens.insert(gens.end(), cover.z.begin(), cover.z.end());
    for (std::size_t j = 0; j < dim; ++j) {
      if (j == lead) continue;
      // e_j - c_j e_lead lies in the kernel of c.
      gens.push_back(basis[j] * basis[lead].pow(static_cast<long long>(p - c[j])));
    }
    PermutationGroup m(std::move(gens));
    if (m.order() != expected_order) orders_ok = false;
    maximal.push_back(std::move(m));
  }
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    bool seen = false;
    for (std::size_t j = 0; j < i && !seen; ++j) seen = maximal[i] == maximal[j];
    if (!seen) ++distinct;
  }
  PermutationGroup meet = maximal.front();
  for (std::size_t i = 1; i < maximal.size(); ++i) meet = intersection(meet, maximal[i]);

  r.witness("maximal_subgroups", distinct);
  r.witness("maximal_subgroup_order", bigint_to_json(expected_order / kernel.order()));
  r.witness("intersection_order", bigint_to_json(meet.order() / kernel.order()));
  r.witness("derived_order", bigint_to_json(derived_n.order() / kernel.order()));
  const std::uint64_t hyperplanes = (vectors - 1) / (p - 1);
  if (!orders_ok || distinct != hyperplanes) r.status = CheckStatus::fail;
  if (!derived_n.is_subgroup_of(meet)) {
    r.status = CheckStatus::fail;
    r.witness("intersection_misses_commutators", describe(meet));
  }
  if (meet != derived_n || meet.order() / kernel.order() != p) r.status = CheckStatus::fail;

  BigInt e_order = full.order() / kernel.order();
  if (e_order <= BigInt(degree_budget) && e_order <= BigInt(options.subgroup_bound)) {
    auto e = quotient_as_permgroup(full, kernel, degree_budget).action;
    auto subs = low_index_subgroups(e, p, options, LowIndexMethod::exhaustive);
    std::size_t proper = 0;
    PermutationGroup e_meet = e;
    for (const auto &m : subs.members)
      if (m != e) {
        ++proper;
        e_meet = intersection(e_meet, m);
      }
    bool agrees = proper == distinct && e_meet == derived_subgroup(e);
    r.witness("coset_action_cross_check",
              {{"degree", e.degree()}, {"maximal_subgroups", proper}, {"agrees", agrees}});
    if (!agrees) r.status = CheckStatus::fail;
  }
  timer.stop(r);
  return r;
}

CheckReport check_hberger(std::uint64_t p, std::uint64_t q, std::uint64_t degree_budget) {
  Timer timer;
  auto w = hberger_group(p, q);
  CheckReport r;
  r.check_name = "hberger";
  r.params = {{"p", p}, {"q", q}};
  auto eta_order = cycle_through(w.eta, 1);
  r.witness("primitive_root", w.primitive_root);
  r.witness("eta", w.eta.to_string_following(eta_order));
  r.witness("tau", w.tau.to_string_following(eta_order));
  r.witness("degree", w.group.degree());
  r.witness("order", bigint_to_json(w.group.order()));

  auto expect = [&](const std::string &label, bool ok) {
    r.witness(label, ok);
    if (!ok) r.status = CheckStatus::fail;
  };
  BigInt order = 1;
  for (std::uint64_t i = 0; i < p; ++i) order *= q;
  expect("order_is_q^p*p^3", w.group.order() == order * p * p * p);
  expect("transitive", is_transitive(w.group));
  expect("sigma_0_gamma_transitive", is_transitive(PermutationGroup({w.sigmas[0], w.gamma})));
  expect("A_normal_of_order_q^p", is_normal_subgroup(w.group, w.a_sub) && w.a_sub.order() == order);
  expect("B_of_order_p^3", w.b_sub.order() == p * p * p);
  expect("A_meets_B_trivially", intersection(w.a_sub, w.b_sub).is_trivial());
  expect("p_blocks_of_size_q", minimal_block_system(w.group, 0, 1).blocks.size() == p);
  expect("solvable", is_solvable(w.group));

  auto quotient = quotient_as_permgroup(w.group, w.a_sub, degree_budget);
  auto iso = find_isomorphism(quotient.action, heisenberg(p));
  if (iso && is_isomorphism(*iso)) {
    nlohmann::json images = nlohmann::json::array();
    for (const auto &x : iso->images) images.push_back(x.to_string());
    r.witness("quotient_isomorphism", {{"quotient", describe(quotient.action)},
                                      {"generator_images", images}});
  } else {
    r.status = CheckStatus::fail;
    r.witness("quotient_not_heisenberg", describe(quotient.action));
  }
  timer.stop(r);
  return r;
}

CheckReport check_bigboy(const std::vector<PermutationGroup> &components,
                         const PermutationGroup &subdirect, const PermutationGroup &n_sub,
                         const AnalysisOptions &options) {
  Timer timer;
  if (components.empty()) fail(ErrorCode::precondition, "no components");
  const std::size_t p = components.front().degree();
  if (!is_prime(p)) fail(ErrorCode::precondition, "component degree must be prime");
  for (const auto &c : components) {
    if (c.degree() != p) fail(ErrorCode::precondition, "components must share one degree");
    if (!is_transitive(c)) fail(ErrorCode::precondition, "components must be transitive");
  }
  auto emb = direct_product(components);
  if (subdirect.degree() != emb.combined.degree() || !subdirect.is_subgroup_of(emb.combined) ||
      !is_subdirect(subdirect, emb))
    fail(ErrorCode::precondition, "not a subdirect product of the components");
  if (n_sub.degree() != subdirect.degree() || !is_normal_subgroup(subdirect, n_sub))
    fail(ErrorCode::precondition, "N is not a normal subgroup");
  CheckReport r;
  r.check_name = "bigboy";
  r.params = {{"p", p}, {"subdirect", group_to_json(subdirect)}, {"normal", group_to_json(n_sub)}};
  auto closure = d_closure(subdirect, n_sub, p, options);
  r.witness("subdirect_order", bigint_to_json(subdirect.order()));
  r.witness("normal_order", bigint_to_json(n_sub.order()));
  r.witness("closure_order", bigint_to_json(closure.order()));
  if (closure != n_sub) {
    r.status = CheckStatus::fail;
    r.witness("closure", describe(closure));
  }
  timer.stop(r);
  return r;
}

CheckReport check_bigboy_family(std::uint64_t p, std::uint64_t samples, std::uint64_t seed,
                                const AnalysisOptions &options) {
  Timer timer;
  const auto &cat = transitive_groups(p).classes;
  if (!is_prime(p)) fail(ErrorCode::invalid_argument, "degree must be prime");
  CheckReport r;
  r.check_name = "bigboy";
  r.params = {{"p", p}};
  if (samples) {
    r.params["samples"] = samples;
    r.params["seed"] = seed;
  }
  std::size_t instances = 0, passed = 0;
  auto run = [&](const std::vector<PermutationGroup> &comps, const PermutationGroup &s,
                 const PermutationGroup &n) {
    ++instances;
    auto one = check_bigboy(comps, s, n, options);
    if (one.status == CheckStatus::pass) {
      ++passed;
    } else if (r.status == CheckStatus::pass) {
      r.status = CheckStatus::fail;
      r.witness("counterexample", {{"subdirect", describe(s)},
                                   {"normal", describe(n)},
                                   {"closure", one.witnesses.back().value}});
    }
  };
  std::map<std::pair<std::size_t, std::size_t>, std::vector<PermutationGroup>> products;
  auto products_of = [&](std::size_t i, std::size_t j) -> const std::vector<PermutationGroup> & {
    auto it = products.find({i, j});
    if (it == products.end())
      it = products.emplace(std::pair{i, j}, enumerate_subdirect_products(cat[i], cat[j], 5040))
               .first;
    return it->second;
  };
  if (samples == 0) {
    for (const auto &g : cat)
      for (const auto &n : normal_subgroups(g, options.element_budget).members) run({g}, g, n);
    for (std::size_t i = 0; i < cat.size(); ++i)
      for (std::size_t j = 0; j < cat.size(); ++j)
        for (const auto &s : products_of(i, j))
          for (const auto &n : normal_subgroups(s, options.element_budget).members)
            run({cat[i], cat[j]}, s, n);
  } else {
    std::mt19937_64 rng(seed);
    for (std::uint64_t k = 0; k < samples; ++k) {
      std::size_t i = rng() % cat.size(), j = rng() % cat.size();
      const auto &prods = products_of(i, j);
      const auto &s = prods[rng() % prods.size()];
      auto normals = normal_subgroups(s, options.element_budget).members;
      run({cat[i], cat[j]}, s, normals[rng() % normals.size()]);
    }
  }
  r.witness("instances", instances);
  r.witness("recovered", passed);
  timer.stop(r);
  return r;
}

CheckReport check_rirw(const PermutationGroup &g, std::uint64_t d, const AnalysisOptions &options) {
  Timer timer;
  if (d == 0) fail(ErrorCode::invalid_argument, "d must be positive");
  CheckReport r;
  r.check_name = "rirw";
  r.params = {{"group", group_to_json(g)}, {"d", d}};
  auto closure = d_closure(g, PermutationGroup::trivial(g.degree()), d, options,
                           IndexFilter::exact);
  const bool b = closure.is_trivial();

  auto subs = low_index_subgroups(g, d, options, LowIndexMethod::automatic, IndexFilter::exact)
                  .members;
  std::vector<bool> covered(subs.size(), false);
  std::vector<PermutationGroup> reps;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (covered[i]) continue;
    reps.push_back(subs[i]);
    std::vector<PermutationGroup> queue{subs[i]};
    covered[i] = true;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (const auto &x : g.generators()) {
        std::vector<Permutation> gens;
        for (const auto &y : queue[head].generators()) gens.push_back(y.conjugate_by(x));
        PermutationGroup conj(std::move(gens));
        for (std::size_t k = 0; k < subs.size(); ++k)
          if (!covered[k] && subs[k] == conj) {
            covered[k] = true;
            queue.push_back(conj);
          }
      }
  }
  bool c = false;
  std::size_t action_degree = 0;
  if (!reps.empty()) {
    std::vector<std::vector<Point>> images(g.generators().size());
    for (const auto &k : reps) {
      auto act = coset_action(g, k, d).action;
      for (std::size_t s = 0; s < images.size(); ++s)
        for (Point x = 0; x < d; ++x)
          images[s].push_back(static_cast<Point>(action_degree + act.generators()[s][x]));
      action_degree += d;
    }
    std::vector<Permutation> gens;
    for (auto &img : images) gens.push_back(Permutation::from_images(std::move(img)));
    c = PermutationGroup(std::move(gens)).order() == g.order();
  }
  r.witness("closure_trivial", b);
  r.witness("closure", describe(closure));
  r.witness("faithful_action_exists", c);
  r.witness("index_d_classes", reps.size());
  r.witness("action_degree", action_degree);
  if (b != c) r.status = CheckStatus::fail;
  timer.stop(r);
  return r;
}

CheckReport check_gtb(std::uint64_t p) {
  Timer timer;
  if (p != 3 && p != 5 && p != 7)
    fail(ErrorCode::invalid_argument, "only the catalogued prime degrees 3, 5, 7 are supported");
  CheckReport r;
  r.check_name = "gtb";
  r.params = {{"p", p}};
  nlohmann::json rows = nlohmann::json::array();
  for (const auto &g : transitive_groups(p).classes) {
    auto normals = normal_subgroups(g).members;
    std::vector<PermutationGroup> minimal;
    for (const auto &n : normals) {
      if (n.is_trivial()) continue;
      bool is_min = true;
      for (const auto &m : normals)
        if (!m.is_trivial() && m.order() < n.order() && m.is_subgroup_of(n)) is_min = false;
      if (is_min) minimal.push_back(n);
    }
    auto row = describe(g);
    std::string problem;
    std::optional<Permutation> complement;
    if (minimal.size() != 1) {
      problem = "minimal normal subgroup is not unique";
    } else {
      const auto &t = minimal.front();
      row["T_order"] = bigint_to_json(t.order());
      const std::uint64_t index = static_cast<std::uint64_t>(g.order() / t.order());
      if (normal_subgroups(t).members.size() != 2) {
        problem = "T is not simple";
      } else if (!is_transitive(t)) {
        problem = "T is not transitive";
      } else if ((p - 1) % index != 0) {
        problem = "|G:T| does not divide p - 1";
      } else {
        for (const auto &x : enumerate_elements(g, kDefaultElementBudget))
          if (x.order() == index && join(t, PermutationGroup({x})).order() == g.order()) {
            complement = x;
            break;
          }
        if (!complement) problem = "no cyclic complement";
      }
    }
    if (complement) {
      row["B_order"] = complement->order();
      row["B_generator"] = complement->to_string();
    }
    if (!problem.empty()) {
      r.status = CheckStatus::fail;
      row["problem"] = problem;
      r.witness("counterexample", row);
    }
    rows.push_back(row);
  }
  r.witness("classes", rows);
  timer.stop(r);
  return r;
}

}  // namespace galkit
