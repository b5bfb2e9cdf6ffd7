#include "coxlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "coxlab/error.hpp"
#include "coxlab/parallel.hpp"
#include "coxlab/rootsys.hpp"

namespace coxlab {

namespace {

using Failure = std::optional<std::string>;

// Runs fn over [0, count) in parallel and folds the outcomes into one check.
template <class F>
Check sweep(const std::string& name, std::size_t count, F&& fn) {
  std::vector<Failure> out(count);
  parallel_for(count, [&](std::size_t i) {
    try {
      out[i] = fn(i);
    } catch (const std::exception& e) {
      out[i] = std::string("error: ") + e.what();
    }
  });
  std::size_t failed = 0;
  const std::string* first = nullptr;
  for (const auto& f : out)
    if (f) {
      ++failed;
      if (!first) first = &*f;
    }
  if (!failed) return {name, true, std::to_string(count) + " cases", false};
  return {name, false, std::to_string(failed) + " of " + std::to_string(count) + " failed; first: " + *first, false};
}

int grid_orbit_sign(int m, int n) { return ((m + 1) * (n + 1)) % 2 ? -1 : 1; }

std::string show(const K0Vector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + "]";
}

K0Vector scaled(K0Vector v, int s) {
  if (s < 0)
    for (auto& x : v) x = -x;
  return v;
}

PlainPartition plain_of(const IdealLattice& lattice, Element x) {
  const auto shape = lattice.shape();
  return PlainPartition(shape.rows, shape.cols, lattice.parts(x));
}

}  // namespace

Expectation grid_expectation(int m, int n) {
  Expectation e;
  const std::size_t k = static_cast<std::size_t>(m + n + 1);
  e.k = k;
  e.sign = grid_orbit_sign(m, n);
  e.exact = *e.sign > 0 ? k : 2 * k;
  e.rule = "Phi^" + std::to_string(k) + " = " + (*e.sign > 0 ? "+I" : "-I") + " with k minimal";
  return e;
}

std::vector<Check> check_bijections(int m, int n) {
  const auto el = enumerate_EL(m, n);
  const auto er = enumerate_ER(m, n);
  const auto configs = enumerate_configs(m, n);
  std::vector<Check> out;
  out.push_back(sweep("g_after_f", el.size(), [&](std::size_t i) -> Failure {
    const auto back = g(f(el[i]));
    if (back == el[i]) return std::nullopt;
    return el[i].to_string() + " -> " + back.to_string();
  }));
  out.push_back(sweep("f_after_g", er.size(), [&](std::size_t i) -> Failure {
    const auto back = f(g(er[i]));
    if (back == er[i]) return std::nullopt;
    return er[i].to_string() + " -> " + back.to_string();
  }));
  out.push_back(sweep("phi_after_psi", el.size(), [&](std::size_t i) -> Failure {
    const auto back = phi(psi(el[i]));
    if (back == el[i]) return std::nullopt;
    return el[i].to_string() + " -> " + back.to_string();
  }));
  out.push_back(sweep("psi_after_phi", configs.size(), [&](std::size_t i) -> Failure {
    const auto back = psi(phi(configs[i]));
    if (back == configs[i]) return std::nullopt;
    return configs[i].to_string() + " -> " + back.to_string();
  }));
  {
    std::set<Configuration> image;
    for (const auto& e : el) image.insert(psi(e));
    const bool ok = image.size() == el.size() && image.size() == configs.size();
    out.push_back({"psi_bijective", ok,
                   "|E_L| = " + std::to_string(el.size()) + ", |image| = " + std::to_string(image.size()) +
                       ", |D| = " + std::to_string(configs.size()),
                   false});
  }
  out.push_back(sweep("tilde_fog", el.size(), [&](std::size_t i) -> Failure {
    const auto a = f_tilde(el[i]);
    const auto b = g(enhance_minus_delta(el[i]));
    if (a == b) return std::nullopt;
    return el[i].to_string() + ": " + a.to_string() + " vs " + b.to_string();
  }));
  out.push_back(sweep("commuting_square", el.size(), [&](std::size_t i) -> Failure {
    const auto a = psi(f_tilde(el[i]));
    const auto b = shift(psi(el[i]), 1);
    if (a == b) return std::nullopt;
    return el[i].to_string() + ": " + a.to_string() + " vs " + b.to_string();
  }));
  return out;
}

Check check_projective_interval(const IdealLattice& lattice) {
  const auto shape = lattice.shape();
  const auto el = enumerate_EL(shape.rows, shape.cols);
  return sweep("projective_interval", el.size(), [&](std::size_t i) -> Failure {
    const auto lhs = euler_class(resolution_terms(el[i], ResolutionKind::Projective), ResolutionKind::Projective, lattice);
    const auto rhs = l_class(lattice, el[i]);
    if (lhs == rhs) return std::nullopt;
    return el[i].to_string() + ": " + show(lhs) + " vs " + show(rhs);
  });
}

Check check_injective_interval(const IdealLattice& lattice) {
  const auto shape = lattice.shape();
  const auto el = enumerate_EL(shape.rows, shape.cols);
  return sweep("injective_interval", el.size(), [&](std::size_t i) -> Failure {
    const auto lhs = euler_class(resolution_terms(el[i], ResolutionKind::Injective), ResolutionKind::Injective, lattice);
    const auto low = enhance_minus_delta(el[i]);
    const int s = r_alpha(el[i]).size() % 2 ? -1 : 1;
    const auto rhs = scaled(interval_class(lattice, chi(low), chi(g(low))), s);
    if (lhs == rhs) return std::nullopt;
    return el[i].to_string() + ": " + show(lhs) + " vs " + show(rhs);
  });
}

Check check_tau_step(const IdealLattice& lattice, const CoxeterOperator& op) {
  const auto shape = lattice.shape();
  const auto el = enumerate_EL(shape.rows, shape.cols);
  return sweep("tau_step", el.size(), [&](std::size_t i) -> Failure {
    const auto lhs = op.apply(l_class(lattice, el[i]));
    const int s = r_alpha(el[i]).size() % 2 ? 1 : -1;  // (-1)^{|R|+1}
    const auto rhs = scaled(interval_class(lattice, delta(el[i], r_alpha(el[i])), chi(f_tilde(el[i]))), s);
    if (lhs == rhs) return std::nullopt;
    return el[i].to_string() + ": " + show(lhs) + " vs " + show(rhs);
  });
}

std::vector<Check> check_sign_transport(const IdealLattice& lattice, const CoxeterOperator& op) {
  const auto shape = lattice.shape();
  const int m = shape.rows, n = shape.cols;
  const auto el = enumerate_EL(m, n);
  const std::size_t N = lattice.size();
  const Poset& L = lattice.lattice();
  const std::size_t width = 64;
  const std::size_t chunks = (el.size() + width - 1) / width;
  const int steps = m + n + 1;
  std::vector<Failure> transport(chunks), closing(chunks);

  auto indicator_matches = [&](const std::int64_t* x, std::size_t w, std::size_t col, const EnhancedPartition& e,
                               std::int64_t s) {
    const Element lo = lattice.index_of(chi(f(e)).parts());
    const Element hi = lattice.index_of(chi(e).parts());
    for (Element b = 0; b < N; ++b) {
      const std::int64_t want = L.leq(lo, b) && L.leq(b, hi) ? s : 0;
      if (x[b * w + col] != want) return false;
    }
    return true;
  };

  parallel_for(chunks, [&](std::size_t c) {
    try {
      const std::size_t start = c * width;
      const std::size_t w = std::min(width, el.size() - start);
      const std::size_t stride = width;  // padded lanes stay zero
      std::vector<std::int64_t> x(N * stride, 0);
      std::vector<EnhancedPartition> cur;
      std::vector<SignedConfiguration> sc;
      for (std::size_t j = 0; j < w; ++j) {
        const auto& e = el[start + j];
        const auto v = l_class(lattice, e);
        for (Element b = 0; b < N; ++b) x[b * stride + j] = v[b].get_si();
        cur.push_back(e);
        sc.push_back({psi(e), 1});
      }
      for (int k = 1; k <= steps; ++k) {
        op.apply_psi_block(x.data(), stride, simd::active());
        for (std::size_t j = 0; j < w; ++j) {
          cur[j] = f_tilde(cur[j]);
          sc[j] = sign_step(sc[j]);
          // Phi^k = (-1)^k Psi^k
          const std::int64_t s = (k % 2 ? -1 : 1) * sc[j].sign;
          if (!transport[c] && !indicator_matches(x.data(), stride, j, cur[j], s))
            transport[c] = el[start + j].to_string() + " at step " + std::to_string(k);
        }
      }
      for (std::size_t j = 0; j < w && !closing[c]; ++j)
        if (!(cur[j] == el[start + j]) || sc[j].sign != grid_orbit_sign(m, n))
          closing[c] = el[start + j].to_string() + " closes at " + cur[j].to_string() + " with sign " +
                       std::to_string(sc[j].sign);
    } catch (const std::exception& e) {
      transport[c] = std::string("error: ") + e.what();
    }
  });
  auto fold = [&](const std::string& name, const std::vector<Failure>& v) {
    for (const auto& f : v)
      if (f) return Check{name, false, *f, false};
    return Check{name, true, std::to_string(el.size()) + " cases, " + std::to_string(steps) + " steps", false};
  };
  return {fold("sign_transport", transport), fold("full_orbit_sign", closing)};
}

Check check_projective_to_injective(const IdealLattice& lattice, const CoxeterOperator& op) {
  const Poset& L = lattice.lattice();
  return sweep("projective_to_injective", L.size(), [&](std::size_t a) -> Failure {
    const auto lhs = op.apply(projective_class(L, a));
    const auto rhs = scaled(injective_class(L, a), -1);
    if (lhs == rhs) return std::nullopt;
    return lattice.lattice().label(a) + ": " + show(lhs) + " vs " + show(rhs);
  });
}

Check check_spanning(const IdealLattice& lattice) {
  const std::size_t N = lattice.size();
  IntMatrix cols(N, N);
  for (Element x = 0; x < N; ++x) cols.set_column(x, l_class(lattice, default_enhance(plain_of(lattice, x))));
  const Integer d = determinant(cols);
  if (d == 1 || d == -1) return {"spanning", true, "det = " + d.get_str() + " over " + std::to_string(N) + " columns", false};
  // weaker literal claim: every projective class is an integer combination
  if (d == 0) return {"spanning", false, "det = 0", false};
  for (Element a = 0; a < N; ++a)
    if (!has_integer_solution(cols, projective_class(lattice.lattice(), a)))
      return {"spanning", false, "det = " + d.get_str() + "; projective " + lattice.lattice().label(a) + " not in the span", false};
  return {"spanning", true, "det = " + d.get_str() + "; spans by exact solve", false};
}

Check check_exactness(const IdealLattice& lattice, ResolutionKind kind) {
  const auto shape = lattice.shape();
  const auto el = enumerate_EL(shape.rows, shape.cols);
  const std::string name = kind == ResolutionKind::Projective ? "exactness_projective" : "exactness_injective";
  return sweep(name, el.size(), [&](std::size_t i) -> Failure {
    const auto rep = check_resolution_exact(el[i], lattice, kind);
    if (rep.ok()) return std::nullopt;
    return el[i].to_string() + ": " + rep.findings.front();
  });
}

Check check_dense_agreement(const IdealLattice& lattice, const CoxeterOperator& op) {
  const Poset& L = lattice.lattice();
  if (!(zeta_matrix(L) * mobius_matrix(L) == IntMatrix::identity(L.size())))
    return {"dense_agreement", false, "Z * M != I", false};
  if (!(op.dense() == coxeter_matrix(L))) return {"dense_agreement", false, "fast operator differs from -Z^T Z^-1", false};
  return {"dense_agreement", true, "Z M = I and operator = -Z^T Z^-1", false};
}

namespace {

void add_order_checks(VerificationReport& r, const CoxeterOperator& op, std::size_t k_max) {
  try {
    r.order = op.find_signed_order(k_max);
  } catch (const NotPeriodic& e) {
    r.checks.push_back({"coxeter_order", false, e.what(), false});
    return;
  }
  const auto& o = *r.order;
  const auto& e = r.expected;
  std::string detail = "Phi^" + std::to_string(o.k) + " = " + (o.sign > 0 ? "+I" : "-I") + ", exact order " +
                       std::to_string(o.exact_order);
  bool ok = true;
  if (e.k) ok = ok && o.k == *e.k;
  if (e.sign) ok = ok && o.sign == *e.sign;
  if (e.exact) ok = ok && o.exact_order == *e.exact;
  if (e.divides) ok = ok && *e.divides % o.exact_order == 0;
  r.checks.push_back({"coxeter_order", ok, detail, false});
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

VerificationReport verify_grid(int m, int n, const VerifyOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  if (m < 1 || n < 1) throw InvalidArgument("grid needs m, n >= 1");
  VerificationReport r;
  r.subject = {"grid", m, n, 0, 0, 0};
  r.expected = grid_expectation(m, n);
  const IdealLattice lattice(grid(m, n), options.order_cap);
  r.lattice_size = lattice.size();
  const CoxeterOperator op(lattice);
  add_order_checks(r, op, options.k_max.value_or(default_order_bound(lattice.size())));

  if (lattice.size() > options.max_size) {
    r.banner = "invariant suite skipped: lattice size " + std::to_string(lattice.size()) + " exceeds max size " +
               std::to_string(options.max_size);
  } else {
    if (lattice.size() <= 200) r.checks.push_back(check_dense_agreement(lattice, op));
    r.checks.push_back(check_projective_to_injective(lattice, op));
    for (auto& c : check_bijections(m, n)) r.checks.push_back(std::move(c));
    r.checks.push_back(check_projective_interval(lattice));
    r.checks.push_back(check_injective_interval(lattice));
    r.checks.push_back(check_tau_step(lattice, op));
    for (auto& c : check_sign_transport(lattice, op)) r.checks.push_back(std::move(c));
    r.checks.push_back(check_spanning(lattice));
    if (!options.skip_exactness) {
      r.checks.push_back(check_exactness(lattice, ResolutionKind::Projective));
      r.checks.push_back(check_exactness(lattice, ResolutionKind::Injective));
    }
  }
  r.ms = elapsed_ms(t0);
  return r;
}

VerificationReport verify_cominuscule(char type, int rank, int root, const VerifyOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport r;
  r.subject = {"cominuscule", 0, 0, type, rank, root};
  const RootSystem rs = build_root_system(type, rank);
  const CominusculeData data = cominuscule_poset(rs, root);
  const int h = coxeter_number(rs);
  const std::size_t period = 2 * static_cast<std::size_t>(h + 1);
  const IdealLattice lattice(data.poset, options.order_cap);
  r.lattice_size = lattice.size();

  const int n = rank;
  bool open = false;
  std::optional<std::size_t> want_poset, want_lattice;
  std::string shape_detail = "shape " + to_string(data.shape);
  bool shape_ok = true;
  switch (type) {
    case 'A': {
      r.expected = grid_expectation(root, n + 1 - root);
      r.expected.rule += " (grid " + std::to_string(root) + "x" + std::to_string(n + 1 - root) + ")";
      shape_ok = isomorphic(data.poset, grid(root, n + 1 - root));
      shape_detail += shape_ok ? ", isomorphic to the grid" : ", not isomorphic to the grid";
      break;
    }
    case 'B': {
      r.expected.exact = static_cast<std::size_t>(2 * n + 1);
      r.expected.divides = period;
      r.expected.rule = "exact order 2n+1 = " + std::to_string(2 * n + 1) + ", divides 2(h+1) = " + std::to_string(period);
      shape_ok = isomorphic(data.poset, grid(1, 2 * n - 1));
      shape_detail += shape_ok ? ", isomorphic to grid 1x" + std::to_string(2 * n - 1) : ", not a chain";
      break;
    }
    case 'C': {
      open = true;
      r.expected.divides = period;
      r.expected.rule = "none (open case); 2(h+1) = " + std::to_string(period);
      shape_ok = isomorphic(data.poset, shifted_staircase(n));
      shape_detail += shape_ok ? ", isomorphic to the staircase" : ", not a staircase";
      break;
    }
    case 'D': {
      if (root == 1) {
        r.expected.exact = period;
        r.expected.divides = period;
        r.expected.rule = "exact order 2(h+1) = " + std::to_string(period) + ", h = " + std::to_string(h);
        want_poset = static_cast<std::size_t>(2 * n - 2);
        want_lattice = static_cast<std::size_t>(2 * n);
        shape_ok = isomorphic(data.poset, fork_poset(n - 2));
        shape_detail += shape_ok ? ", isomorphic to the fork" : ", not the fork";
      } else {
        open = true;
        r.expected.divides = period;
        r.expected.rule = "none (open case, same poset as C" + std::to_string(n - 1) + "); 2(h+1) = " + std::to_string(period);
        shape_ok = isomorphic(data.poset, shifted_staircase(n - 1));
        shape_detail += shape_ok ? ", isomorphic to the staircase of C" + std::to_string(n - 1) : ", not a staircase";
      }
      break;
    }
    case 'E': {
      r.expected.divides = period;
      r.expected.rule = "exact order divides 2(h+1) = " + std::to_string(period) + ", h = " + std::to_string(h);
      want_poset = rank == 6 ? 16 : 27;
      want_lattice = rank == 6 ? 27 : 56;
      break;
    }
    default:
      break;
  }
  r.checks.push_back({"cominuscule_shape", shape_ok, shape_detail, false});
  if (want_poset)
    r.checks.push_back({"poset_size", data.poset.size() == *want_poset,
                        std::to_string(data.poset.size()) + " elements, expected " + std::to_string(*want_poset), false});
  if (want_lattice)
    r.checks.push_back({"lattice_size", lattice.size() == *want_lattice,
                        std::to_string(lattice.size()) + " ideals, expected " + std::to_string(*want_lattice), false});

  const CoxeterOperator op(lattice);
  add_order_checks(r, op, options.k_max.value_or(default_order_bound(lattice.size())));
  if (open) {
    r.banner = "open case - no theorem; the measured order is reported only";
    r.checks.back().open = true;
  }

  if (type == 'D' && root == 1) {
    const auto a = char_poly(op.dense());
    const auto b = char_poly(coxeter_matrix(d_tree_poset(2 * n)));
    r.checks.push_back({"char_poly_d_tree", a == b, "J(C_III) against the D" + std::to_string(2 * n) + " tree", false});
  }
  if (lattice.size() <= 60) {
    const bool pal = is_palindromic_up_to_sign(char_poly(op.dense()));
    r.checks.push_back({"char_poly_palindromic", pal, "", false});
  }
  r.ms = elapsed_ms(t0);
  return r;
}

OrbitTrace orbit_trace(int m, int n, const EnhancedPartition& alpha) {
  if (alpha.m() != m || alpha.n() != n)
    throw InvalidArgument("alpha " + alpha.to_string() + " does not fit the " + std::to_string(m) + "x" +
                          std::to_string(n) + " box");
  if (!is_EL(alpha)) throw InvalidArgument("orbit needs an E_L partition: " + alpha.to_string());
  OrbitTrace t;
  t.m = m;
  t.n = n;
  EnhancedPartition e = alpha;
  SignedConfiguration sc{psi(alpha), 1};
  for (int k = 0; k <= m + n + 1; ++k) {
    t.rows.push_back({k, e, chi(f(e)), chi(e), sc.config, sc.sign});
    e = f_tilde(e);
    sc = sign_step(sc);
  }
  const auto& first = t.rows.front();
  const auto& last = t.rows.back();
  t.closes = last.partition == first.partition && last.config == first.config && last.sign == grid_orbit_sign(m, n);
  return t;
}

nlohmann::ordered_json to_json(const OrbitTrace& t) {
  nlohmann::ordered_json j;
  j["schema"] = kSchema;
  j["subject"] = {{"kind", "orbit"}, {"m", t.m}, {"n", t.n}, {"alpha", t.rows.front().partition.to_string()}};
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : t.rows)
    rows.push_back({{"step", r.step},
                    {"partition", r.partition.to_string()},
                    {"interval", {r.lo.to_string(), r.hi.to_string()}},
                    {"config", r.config.to_string()},
                    {"sign", r.sign}});
  j["rows"] = rows;
  j["closes"] = t.closes;
  return j;
}

std::string to_text(const OrbitTrace& t) {
  std::string s = "step  partition  interval  configuration  sign\n";
  for (const auto& r : t.rows)
    s += std::to_string(r.step) + "  " + r.partition.to_string() + "  [[" + r.lo.to_string() + "," + r.hi.to_string() +
         "]]  " + r.config.to_string() + "  " + (r.sign > 0 ? "+" : "-") + "\n";
  s += t.closes ? "closes after " : "DOES NOT close after ";
  s += std::to_string(t.m + t.n + 1) + " steps\n";
  return s;
}

}  // namespace coxlab
