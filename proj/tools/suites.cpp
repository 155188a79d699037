#include "suites.hpp"

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

namespace qtorus::cli {

namespace {

struct ItemResult {
  std::size_t checks = 0;
  std::vector<Failure> failures;
  std::vector<std::vector<std::string>> rows;
};

// Runs fn over items on a small pool; results are kept in item order so the
// report does not depend on scheduling.
template <class Item>
std::vector<ItemResult> run_items(const std::vector<Item>& items, unsigned jobs,
                                  const std::function<ItemResult(const Item&)>& fn) {
  std::vector<ItemResult> results(items.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        results[i] = fn(items[i]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = items.size();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(items.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return results;
}

void merge(SuiteResult& out, std::vector<ItemResult> parts) {
  for (auto& part : parts) {
    out.checks += part.checks;
    for (auto& f : part.failures) out.failures.push_back(std::move(f));
    for (auto& r : part.rows) out.report_rows.push_back(std::move(r));
  }
}

template <class T>
void expect_equal(ItemResult& res, json params, const T& lhs, const T& rhs) {
  ++res.checks;
  if (!(lhs == rhs)) res.failures.push_back({std::move(params), lhs.to_string(), rhs.to_string()});
}

void expect_true(ItemResult& res, json params, bool ok, const std::string& what) {
  ++res.checks;
  if (!ok) res.failures.push_back({std::move(params), what, "true"});
}

std::string matrix_string(const OperatorMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + m(i, j).to_string();
    s += "]";
  }
  return s + "]";
}

std::string cyclo_matrix_string(const CycloMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + m(i, j).to_string();
    s += "]";
  }
  return s + "]";
}

template <class Ring>
std::string word_string(const NCWord<Ring>& w) {
  if (w.is_zero()) return "0";
  std::string s;
  for (const auto& [key, c] : w.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")e(" + std::to_string(key.first) + "," + std::to_string(key.second) + ")";
  }
  return s;
}

template <class Ring>
std::string symbol_string(const SymbolElement<Ring>& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [key, c] : a.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")C(" + std::to_string(key.first) + "," + std::to_string(key.second) + ")";
  }
  return s;
}

using Quad = std::array<std::int64_t, 5>;  // r, m, n, p, q

std::vector<Quad> pair_sweep(const std::vector<int>& levels, int bound) {
  std::vector<Quad> items;
  for (int r : levels) {
    for (int m = -bound; m <= bound; ++m) {
      for (int n = -bound; n <= bound; ++n) {
        for (int p = -bound; p <= bound; ++p) {
          for (int q = -bound; q <= bound; ++q) items.push_back({r, m, n, p, q});
        }
      }
    }
  }
  return items;
}

json quad_params(const Quad& it) {
  return json{{"r", it[0]}, {"m", it[1]}, {"n", it[2]}, {"p", it[3]}, {"q", it[4]}};
}

SuiteResult product_to_sum_suite(const SuiteOptions& o) {
  SuiteResult out;
  const auto items = pair_sweep(o.levels, o.bound);
  merge(out, run_items<Quad>(items, o.jobs, [](const Quad& it) {
          ItemResult res;
          const auto& ctx = CycloContext::get(static_cast<int>(it[0]));
          const auto pts = product_to_sum(ctx, it[1], it[2], it[3], it[4]);
          ++res.checks;
          if (!pts.ok()) {
            const auto [i, j] = *pts.mismatch;
            json params = quad_params(it);
            params["entry"] = json::array({i + 1, j + 1});
            res.failures.push_back({std::move(params), pts.lhs(i, j).to_string(), pts.rhs(i, j).to_string()});
          }
          return res;
        }));
  return out;
}

SuiteResult thm2_suite(const SuiteOptions& o) {
  using Item = std::array<std::int64_t, 3>;
  std::vector<Item> items;
  for (int r : o.levels) {
    for (int p = -o.bound; p <= o.bound; ++p) {
      for (int q = -o.bound; q <= o.bound; ++q) items.push_back({r, p, q});
    }
  }
  SuiteResult out;
  merge(out, run_items<Item>(items, o.jobs, [](const Item& it) {
          ItemResult res;
          const auto& ctx = CycloContext::get(static_cast<int>(it[0]));
          const auto [r, p, q] = it;
          for (std::int64_t k = 1; k < r; ++k) {
            const TorusVector v = c_action(ctx, p, q, k);
            for (std::int64_t m = 1; m < r; ++m) {
              const json params{{"r", r}, {"p", p}, {"q", q}, {"k", k}, {"m", m}};
              const Scalar action = pairing(v, m);
              const CycloElement closed = pairing_form(ctx, p, q, k, m);
              const CycloElement four = four_term_form(ctx, p, q, k, m);
              json pa = params;
              pa["compare"] = "action-vs-pairing-form";
              expect_equal(res, std::move(pa), action, Scalar(closed));
              json pb = params;
              pb["compare"] = "pairing-form-vs-four-term";
              expect_equal(res, std::move(pb), closed, four);
            }
          }
          return res;
        }));
  return out;
}

struct PipelineItem {
  int r;
  std::int64_t p, q;  // already multiplied by d
};

std::vector<PipelineItem> pipeline_items(const SuiteOptions& o) {
  std::vector<PipelineItem> items;
  for (int r : o.levels) {
    for (std::int64_t pp = -o.slope_bound; pp <= o.slope_bound; ++pp) {
      for (std::int64_t qq = -o.slope_bound; qq <= o.slope_bound; ++qq) {
        if (std::gcd(pp, qq) != 1) continue;
        for (std::int64_t d = 1; d <= o.d_max; ++d) items.push_back({r, d * pp, d * qq});
      }
    }
  }
  return items;
}

void collapse_checks(ItemResult& res, const CycloContext& ctx, const PipelineItem& it, std::int64_t k,
                     std::int64_t m, const CycloElement& closed, LemmaMemo& memo) {
  const json params{{"r", it.r}, {"p", it.p}, {"q", it.q}, {"k", k}, {"m", m}};
  const CollapseResult col = collapse_via_lemma(ctx, it.p, it.q, k, m, &memo);
  json pc = params;
  pc["compare"] = "collapse-vs-pairing-form";
  expect_equal(res, std::move(pc), col.value, Scalar(closed));
  for (const auto& step : col.steps) {
    res.checks += step.applications;
    for (const auto& t : step.failures) {
      const LemmaCheck lc = lemma_check(ctx, t);
      json pl = params;
      pl["compare"] = "lemma";
      pl["tuple"] = to_json(t);
      res.failures.push_back({std::move(pl), lc.lhs.to_string(), lc.rhs.to_string()});
    }
  }
}

SuiteResult pipeline_suite(const SuiteOptions& o) {
  SuiteResult out;
  const auto items = pipeline_items(o);
  merge(out, run_items<PipelineItem>(items, o.jobs, [](const PipelineItem& it) {
          ItemResult res;
          const auto& ctx = CycloContext::get(it.r);
          LemmaMemo memo;
          const json base{{"r", it.r}, {"p", it.p}, {"q", it.q}};
          json po = base;
          po["compare"] = "conjugated-operator-vs-c-matrix";
          const OperatorMatrix conj = conjugated_curve_operator(ctx, it.p, it.q);
          const OperatorMatrix direct = c_matrix(ctx, it.p, it.q);
          ++res.checks;
          if (!(conj == direct)) res.failures.push_back({std::move(po), matrix_string(conj), matrix_string(direct)});
          for (std::int64_t k = 1; k < it.r; ++k) {
            for (std::int64_t m = 1; m < it.r; ++m) {
              json params = base;
              params["k"] = k;
              params["m"] = m;
              const CycloElement closed = pairing_form(ctx, it.p, it.q, k, m);
              params["compare"] = "c-bracket-vs-pairing-form";
              try {
                expect_equal(res, params, c_bracket(ctx, it.p, it.q, k, m), closed);
              } catch (const GradingError& e) {
                ++res.checks;
                res.failures.push_back({params, std::string("grading: ") + e.what(), closed.to_string()});
              }
              collapse_checks(res, ctx, it, k, m, closed, memo);
            }
          }
          return res;
        }));

  // Literal nested sums against the contraction chain at the smallest level.
  using Literal = std::array<std::int64_t, 2>;
  std::vector<Literal> literal;
  if (std::find(o.levels.begin(), o.levels.end(), 3) != o.levels.end()) {
    for (std::int64_t pp = -o.slope_bound; pp <= o.slope_bound; ++pp) {
      for (std::int64_t qq = -o.slope_bound; qq <= o.slope_bound; ++qq) {
        if (pp == 0 || qq == 0 || std::gcd(pp, qq) != 1) continue;
        if (neg_cfrac(pp, qq).a.size() <= 2) literal.push_back({pp, qq});
      }
    }
  }
  merge(out, run_items<Literal>(literal, o.jobs, [](const Literal& it) {
          ItemResult res;
          const auto& ctx = CycloContext::get(3);
          const auto cf = neg_cfrac(it[0], it[1]);
          for (std::int64_t c = 1; c < 3; ++c) {
            for (std::int64_t k = 1; k < 3; ++k) {
              for (std::int64_t m = 1; m < 3; ++m) {
                const json params{{"r", 3}, {"p", it[0]}, {"q", it[1]}, {"color", c}, {"k", k},
                                  {"m", m},  {"compare", "literal-sum-vs-chain"}};
                expect_equal(res, params, literal_bracket_S(ctx, cf, c, k, m),
                             bracket_S(ctx, it[0], it[1], c, k, m));
              }
            }
          }
          return res;
        }));
  out.summary["literal_slopes"] = literal.size();
  return out;
}

SuiteResult lemma_scan_suite(const SuiteOptions& o) {
  SuiteResult out;
  out.report_header = {"r", "a", "b", "c", "d", "e", "equal"};
  using Item = std::array<std::int64_t, 2>;  // r, a
  std::vector<Item> items;
  for (int r : o.levels) {
    for (int a = -o.range; a <= o.range; ++a) items.push_back({r, a});
  }
  std::size_t scan_failures = 0;
  const int range = o.range;
  auto scan = run_items<Item>(items, o.jobs, [range](const Item& it) {
    ItemResult res;
    const auto& ctx = CycloContext::get(static_cast<int>(it[0]));
    for (std::int64_t b = -range; b <= range; ++b) {
      for (std::int64_t c = -range; c <= range; ++c) {
        for (std::int64_t d = -range; d <= range; ++d) {
          for (std::int64_t e = -range; e <= range; ++e) {
            const bool eq = lemma_check(ctx, {it[1], b, c, d, e}).equal;
            res.rows.push_back({std::to_string(it[0]), std::to_string(it[1]), std::to_string(b), std::to_string(c),
                                std::to_string(d), std::to_string(e), eq ? "true" : "false"});
          }
        }
      }
    }
    return res;
  });
  for (auto& part : scan) {
    for (auto& row : part.rows) {
      if (row.back() == "false") ++scan_failures;
      out.report_rows.push_back(std::move(row));
    }
  }

  // Hard requirement: tuples generated by the collapse itself.
  std::size_t applications = 0;
  const auto items2 = pipeline_items(o);
  auto hard = run_items<PipelineItem>(items2, o.jobs, [](const PipelineItem& it) {
    ItemResult res;
    const auto& ctx = CycloContext::get(it.r);
    LemmaMemo memo;
    for (std::int64_t k = 1; k < it.r; ++k) {
      for (std::int64_t m = 1; m < it.r; ++m) {
        const CollapseResult col = collapse_via_lemma(ctx, it.p, it.q, k, m, &memo);
        for (const auto& step : col.steps) {
          res.checks += step.applications;
          for (const auto& t : step.failures) {
            const LemmaCheck lc = lemma_check(ctx, t);
            res.failures.push_back({json{{"r", it.r}, {"p", it.p}, {"q", it.q}, {"k", k}, {"m", m},
                                         {"tuple", to_json(t)}},
                                    lc.lhs.to_string(), lc.rhs.to_string()});
          }
        }
      }
    }
    return res;
  });
  for (auto& part : hard) {
    applications += part.checks;
    out.checks += part.checks;
    for (auto& f : part.failures) out.failures.push_back(std::move(f));
  }
  out.summary["scanned"] = out.report_rows.size();
  out.summary["scan_failures"] = scan_failures;
  out.summary["pipeline_applications"] = applications;
  return out;
}

SuiteResult nc_torus_suite(const SuiteOptions& o) {
  SuiteResult out;
  for (int r : o.levels) {
    ItemResult res;
    const auto& ctx = CycloContext::get(r);
    const auto model = clock_shift_model(ctx);
    const json params{{"r", r}};
    const CycloMatrix uv = model.u * model.v;
    const CycloMatrix vu = t_power(ctx, 2) * (model.v * model.u);
    ++res.checks;
    if (!(uv == vu)) res.failures.push_back({params, cyclo_matrix_string(uv), cyclo_matrix_string(vu)});
    CycloMatrix u_pow = model.identity(), v_pow = model.identity();
    for (int i = 0; i < 2 * r; ++i) {
      u_pow = model.u * u_pow;
      v_pow = model.v * v_pow;
    }
    expect_true(res, params, u_pow == model.identity() && v_pow == model.identity(), "U^{2r} = V^{2r} = 1");
    std::vector<ItemResult> one{std::move(res)};
    merge(out, std::move(one));
  }

  const auto items = pair_sweep(o.levels, o.bound);
  merge(out, run_items<Quad>(items, o.jobs, [](const Quad& it) {
          ItemResult res;
          const auto& ctx = CycloContext::get(static_cast<int>(it[0]));
          const CycloRing ring(ctx);
          const auto [r, m, n, p, q] = it;
          const std::int64_t d = m * q - n * p;
          const json params = quad_params(it);

          const auto lhs = weyl_multiply(nc_cosine(ring, m, n), nc_cosine(ring, p, q));
          const auto rhs = ring.t_power(d) * nc_cosine(ring, m + p, n + q) +
                           ring.t_power(-d) * nc_cosine(ring, m - p, n - q);
          json pw = params;
          pw["compare"] = "nc-cosine-product-to-sum";
          ++res.checks;
          if (!(lhs == rhs)) res.failures.push_back({std::move(pw), word_string(lhs), word_string(rhs)});

          if (r == 3) {
            const LaurentRing formal;
            const auto fl = weyl_multiply(nc_cosine(formal, m, n), nc_cosine(formal, p, q));
            const auto fr = formal.t_power(d) * nc_cosine(formal, m + p, n + q) +
                            formal.t_power(-d) * nc_cosine(formal, m - p, n - q);
            json pf = params;
            pf["compare"] = "nc-cosine-product-to-sum-formal";
            ++res.checks;
            if (!(fl == fr)) res.failures.push_back({std::move(pf), word_string(fl), word_string(fr)});
          }

          const auto model = clock_shift_model(ctx);
          const CycloMatrix ml = model.evaluate(nc_cosine(ring, m, n)) * model.evaluate(nc_cosine(ring, p, q));
          const CycloMatrix mr = model.evaluate(rhs);
          json pc = params;
          pc["compare"] = "clock-shift-product-to-sum";
          ++res.checks;
          if (!(ml == mr)) res.failures.push_back({std::move(pc), cyclo_matrix_string(ml), cyclo_matrix_string(mr)});

          const auto a = SymbolElement<CycloRing>::symbol(ring, m, n);
          const auto b = SymbolElement<CycloRing>::symbol(ring, p, q);
          const OperatorMatrix hl = rep_operator(ctx, star_multiply(a, b));
          const OperatorMatrix hr = rep_operator(ctx, a) * rep_operator(ctx, b);
          json ph = params;
          ph["compare"] = "rep-homomorphism";
          ++res.checks;
          if (!(hl == hr)) res.failures.push_back({std::move(ph), matrix_string(hl), matrix_string(hr)});
          return res;
        }));
  return out;
}

template <class Ring>
SymbolElement<Ring> random_symbol(const Ring& ring, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> terms(1, 3), lattice(-bound, bound), coeff(-3, 3), expo(-4, 4);
  SymbolElement<Ring> s(ring);
  const int n = terms(rng);
  for (int i = 0; i < n; ++i) {
    const int p = lattice(rng), q = lattice(rng);
    int c = coeff(rng);
    if (c == 0) c = 1;
    const int e = expo(rng);
    s.add(p, q, ring.from_int(c) * ring.t_power(e));
  }
  return s;
}

template <class Ring>
NCWord<Ring> random_word(const Ring& ring, std::mt19937_64& rng, int bound) {
  NCWord<Ring> w(ring);
  const auto s = random_symbol(ring, rng, bound);
  for (const auto& [key, c] : s.terms()) w.add(key.first, key.second, c);
  return w;
}

SuiteResult associativity_suite(const SuiteOptions& o) {
  SuiteResult out;
  std::mt19937_64 rng(o.seed);
  const LaurentRing formal;
  using SymTriple = std::array<SymbolElement<LaurentRing>, 3>;
  using WordTriple = std::array<NCWord<LaurentRing>, 3>;
  std::vector<SymTriple> sym;
  std::vector<WordTriple> words;
  for (int i = 0; i < o.count; ++i) {
    sym.push_back({random_symbol(formal, rng, o.bound), random_symbol(formal, rng, o.bound),
                   random_symbol(formal, rng, o.bound)});
  }
  for (int i = 0; i < o.count; ++i) {
    words.push_back({random_word(formal, rng, o.bound), random_word(formal, rng, o.bound),
                     random_word(formal, rng, o.bound)});
  }

  std::vector<std::size_t> idx(sym.size());
  std::iota(idx.begin(), idx.end(), 0);
  merge(out, run_items<std::size_t>(idx, o.jobs, [&](const std::size_t& i) {
          ItemResult res;
          const auto& [a, b, c] = sym[i];
          const auto left = star_multiply(star_multiply(a, b), c);
          const auto right = star_multiply(a, star_multiply(b, c));
          const json params{{"triple", i}, {"ring", "laurent"}, {"product", "star"}, {"a", symbol_string(a)},
                            {"b", symbol_string(b)}, {"c", symbol_string(c)}};
          ++res.checks;
          if (!(left == right)) res.failures.push_back({params, symbol_string(left), symbol_string(right)});

          const auto& [x, y, z] = words[i];
          const auto wl = weyl_multiply(weyl_multiply(x, y), z);
          const auto wr = weyl_multiply(x, weyl_multiply(y, z));
          ++res.checks;
          if (!(wl == wr)) {
            res.failures.push_back({json{{"triple", i}, {"ring", "laurent"}, {"product", "weyl"}},
                                    word_string(wl), word_string(wr)});
          }

          // Same words over each cyclotomic level.
          for (int r : o.levels) {
            const CycloRing ring(CycloContext::get(r));
            auto lift = [&](const NCWord<LaurentRing>& w) {
              NCWord<CycloRing> out_w(ring);
              for (const auto& [key, poly] : w.terms()) {
                CycloElement v = ring.zero();
                for (const auto& [e, q] : poly.terms()) {
                  v += CycloElement(*ring.ctx, {q}).times_t_power(e);
                }
                out_w.add(key.first, key.second, v);
              }
              return out_w;
            };
            const auto cx = lift(x), cy = lift(y), cz = lift(z);
            const auto cl = weyl_multiply(weyl_multiply(cx, cy), cz);
            const auto cr = weyl_multiply(cx, weyl_multiply(cy, cz));
            ++res.checks;
            if (!(cl == cr)) {
              res.failures.push_back({json{{"triple", i}, {"ring", ring.name()}, {"product", "weyl"}},
                                      word_string(cl), word_string(cr)});
            }
          }
          return res;
        }));
  out.summary["triples"] = o.count;
  return out;
}

SuiteResult cfrac_suite(const SuiteOptions& o) {
  SuiteResult out;
  ItemResult res;
  for (std::int64_t p = -o.bound; p <= o.bound; ++p) {
    for (std::int64_t q = -o.bound; q <= o.bound; ++q) {
      if (p == 0 || q == 0 || std::gcd(p, q) != 1) continue;
      const auto cf = neg_cfrac(p, q);
      json params{{"p", p}, {"q", q}, {"cfrac", to_json(cf)}};
      const Rational value = evaluate_cfrac(cf);
      const Rational target = Rational(q) / Rational(p);
      ++res.checks;
      if (value != target) res.failures.push_back({params, value.get_str(), target.get_str()});
      bool normalized = true;
      for (std::size_t i = 1; i < cf.a.size(); ++i) normalized = normalized && cf.a[i] >= 2;
      expect_true(res, params, normalized, "a_i >= 2 for i >= 2");
      expect_true(res, params, sl2_word_check(cf, p, q), "sl2_word_check");
    }
  }
  std::vector<ItemResult> parts{std::move(res)};
  merge(out, std::move(parts));
  return out;
}

SuiteResult reduction_suite(const SuiteOptions& o) {
  SuiteResult out;
  for (int r : o.levels) {
    ItemResult res;
    const auto& ctx = CycloContext::get(r);
    for (std::int64_t n = -3 * r; n <= 3 * r; ++n) {
      expect_equal(res, json{{"r", r}, {"n", n}}, TorusVector::color(ctx, n), recursion_oracle(ctx, n));
    }
    std::vector<ItemResult> parts{std::move(res)};
    merge(out, std::move(parts));
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"product-to-sum", "thm2-consistency", "pipeline-vs-closed-form",
                                              "lemma-scan",     "nc-torus",         "associativity",
                                              "cfrac",          "reduction-oracle"};
  return names;
}

SuiteOptions default_options(const std::string& suite) {
  auto levels = [](int a, int b) {
    std::vector<int> v;
    for (int r = a; r <= b; ++r) v.push_back(r);
    return v;
  };
  SuiteOptions o;
  o.jobs = std::max(1u, std::thread::hardware_concurrency());
  o.seed = 1;
  o.slope_bound = 5;
  o.d_max = 3;
  if (suite == "product-to-sum") {
    o.levels = levels(3, 8);
    o.bound = 4;
  } else if (suite == "thm2-consistency") {
    o.levels = levels(3, 8);
    o.bound = 6;
  } else if (suite == "pipeline-vs-closed-form") {
    o.levels = levels(3, 5);
  } else if (suite == "lemma-scan") {
    o.levels = levels(3, 6);
    o.range = 3;
  } else if (suite == "nc-torus") {
    o.levels = levels(3, 6);
    o.bound = 4;
  } else if (suite == "associativity") {
    o.levels = levels(3, 6);
    o.bound = 5;
    o.count = 500;
  } else if (suite == "cfrac") {
    o.bound = 12;
  } else if (suite == "reduction-oracle") {
    o.levels = levels(3, 8);
  } else {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  return o;
}

SuiteResult run_suite(const std::string& suite, const SuiteOptions& options) {
  for (int r : options.levels) {
    if (r < 3) throw std::invalid_argument("level must be at least 3");
  }
  if (options.bound < 0 || options.slope_bound < 0 || options.d_max < 0 || options.range < 0 || options.count < 0) {
    throw std::invalid_argument("bounds must be non-negative");
  }
  SuiteResult out;
  if (suite == "product-to-sum") {
    out = product_to_sum_suite(options);
  } else if (suite == "thm2-consistency") {
    out = thm2_suite(options);
  } else if (suite == "pipeline-vs-closed-form") {
    out = pipeline_suite(options);
  } else if (suite == "lemma-scan") {
    out = lemma_scan_suite(options);
  } else if (suite == "nc-torus") {
    out = nc_torus_suite(options);
  } else if (suite == "associativity") {
    out = associativity_suite(options);
  } else if (suite == "cfrac") {
    out = cfrac_suite(options);
  } else if (suite == "reduction-oracle") {
    out = reduction_suite(options);
  } else {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  out.name = suite;
  out.options = options;
  return out;
}

}  // namespace qtorus::cli
