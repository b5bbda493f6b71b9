#include "qtoric/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>

#include "qtoric/errors.hpp"

namespace qtoric {

namespace {

Json one_based(const std::vector<int>& idx) {
  Json a = Json::array();
  for (int i : idx)
    a.push_back(i + 1);
  return a;
}

Json error_json(ErrorCode code, const std::string& message) {
  Json e;
  e["code"] = std::string(error_code_name(code));
  e["message"] = message;
  return e;
}

bool all_pass(const Json& verdicts) {
  for (const auto& [_, v] : verdicts.items())
    if (!v.is_boolean() || !v.get<bool>())
      return false;
  return true;
}

std::size_t nonzero_terms(const LocalizedSeries& s) {
  std::size_t n = 0;
  for (const auto& [d, v] : s.terms())
    if (!is_zero(v))
      ++n;
  return n;
}

bool is_unit_series(const Cohomology& coh, const ClassSeries& s) {
  for (const auto& [d, c] : s.terms())
    if (is_zero_degree(d) ? c != coh.unit() : !is_zero(c))
      return false;
  return true;
}

Json fixed_point_table(const ToricModel& model) {
  const auto names = default_variable_names(model.m());
  const auto& labels = model.fan.labels();
  Json pts = Json::array();
  for (const auto& p : model.points) {
    Json o;
    o["cone"] = one_based(p.cone);
    o["key"] = point_key(p);
    Json r = Json::object();
    for (std::size_t j = 0; j < p.restriction.size(); ++j)
      r[labels[j]] = linear_form_poly(p.restriction[j], model.nvars()).to_string(names);
    o["restriction"] = r;
    o["euler"] = function_string(model, p.euler);
    pts.push_back(std::move(o));
  }
  return pts;
}

} // namespace

Json check_payload(const Fan& fan, const std::optional<std::vector<BigRat>>& omega) {
  ToricModel model = build_model(fan, Chart::full, omega);
  const auto& cert = model.certificate;
  Json res;
  res["dimension"] = fan.dim();
  res["rays"] = fan.rays();
  Json cones = Json::array();
  for (const auto& c : fan.cones())
    cones.push_back(one_based(c));
  res["cones"] = cones;
  res["labels"] = fan.labels();
  res["fixed_points"] = fixed_point_table(model);
  Json walls = Json::array();
  for (const auto& w : cert.walls) {
    Json o;
    o["class"] = degree_json(w.degree);
    o["wall"] = one_based(w.wall);
    o["cones"] = Json::array({w.cone_a + 1, w.cone_b + 1});
    walls.push_back(std::move(o));
  }
  res["walls"] = walls;
  Json gens = Json::array();
  for (const auto& g : cert.generators)
    gens.push_back(degree_json(g));
  res["generators"] = gens;
  res["omega"] = rationals_json(model.omega);
  res["certificate_omega"] = rationals_json(cert.omega);

  Json verdicts;
  verdicts["valid"] = true;
  verdicts["certificate_verified"] = verify_certificate(fan, cert);
  return Json{{"results", res}, {"verdicts", verdicts}};
}

Json ifun_payload(const ToricModel& model, const BigRat& cutoff, Execution exec) {
  LocalizedSeries I = ifun_series(model, cutoff, exec);
  Json res;
  res["I"] = localized_series_json(model, I);
  res["terms"] = I.size();
  Json verdicts;
  const LocalizedClass* i0 = I.find(Degree(model.m(), 0));
  bool unit = i0 != nullptr;
  if (i0)
    for (const auto& v : i0->values)
      unit = unit && v.is_one();
  verdicts["degree_zero_is_one"] = unit;
  return Json{{"results", res}, {"verdicts", verdicts}};
}

Json flowcheck_payload(const ToricModel& model, const BigRat& cutoff, Execution exec) {
  LocalizedSeries I = ifun_series(model, cutoff, exec);
  Json res, verdicts, counts = Json::object();
  for (std::size_t i = 0; i < model.m(); ++i) {
    std::size_t bad = nonzero_terms(flow_residual(model, i, I, exec));
    counts[std::to_string(i + 1)] = bad;
    verdicts["flow_residual_" + std::to_string(i + 1)] = bad == 0;
  }
  res["nonzero_residual_terms"] = counts;
  res["terms"] = I.size();
  return Json{{"results", res}, {"verdicts", verdicts}};
}

Json shift_payload(const ToricModel& model, const Cocharacter& k,
                   const std::optional<Cocharacter>& l) {
  if (k.size() != model.m() || (l && l->size() != model.m()))
    throw Error(ErrorCode::ArityMismatch, "shift vectors need one entry per ray");
  StrippedShiftOp op = make_shift(model, k);
  Json res, verdicts = Json::object();
  res["k"] = k;
  Json table = Json::array();
  for (std::size_t x = 0; x < op.table.size(); ++x) {
    Json o;
    o["point"] = point_key(model.points[x]);
    o["offset"] = degree_json(op.table[x].offset);
    o["factor"] = function_string(model, op.table[x].factor);
    table.push_back(std::move(o));
  }
  res["table"] = table;
  if (l) {
    res["l"] = *l;
    Json comp;
    try {
      Degree a = compose_offset(model, k, *l);
      comp["d_kl"] = degree_json(a);
      verdicts["composition_consistent"] = true;
      try {
        Degree b = compose_offset(model, *l, k);
        comp["d_lk"] = degree_json(b);
        verdicts["composition_symmetric"] = a == b;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::InconsistentComposition)
          throw;
        comp["error"] = error_json(e.code(), e.what());
        verdicts["composition_symmetric"] = false;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InconsistentComposition)
        throw;
      comp["error"] = error_json(e.code(), e.what());
      verdicts["composition_consistent"] = false;
    }
    res["composition"] = comp;
  }
  return Json{{"results", res}, {"verdicts", verdicts}};
}

Json mirror_payload(const ToricModel& model, const BigRat& cutoff, bool connection,
                    Execution exec) {
  Cohomology coh(model);
  const auto degrees = model_degrees(model, cutoff);
  LocalizedSeries I = ifun_series_over(model, degrees, cutoff, exec);
  MatrixSeries L = derivative_frame(coh, I, exec);
  BirkhoffFactors F = birkhoff_factorize(coh, L, degrees, exec);
  FactorizationCheck check = verify_factorization(L, F, exec);

  Json res, verdicts;
  Json basis = Json::array();
  for (const auto& a : coh.basis())
    basis.push_back(monomial_name(a));
  res["basis"] = basis;
  res["terms"] = I.size();
  verdicts["factorization_exact"] = check.exact;
  verdicts["u_proper"] = check.u_proper;
  verdicts["p_polynomial"] = check.p_polynomial;
  if (!check.bad_degrees.empty()) {
    Json bad = Json::array();
    for (const auto& d : check.bad_degrees)
      bad.push_back(degree_json(d));
    res["bad_degrees"] = bad;
  }

  ClassSeries tau = extract_tau(coh, F);
  res["tau"] = class_series_json(coh, tau);
  res["tau_trivial"] = tau.empty();
  try {
    ClassSeries ups = extract_upsilon(coh, F);
    res["upsilon"] = class_series_json(coh, ups);
    res["upsilon_trivial"] = is_unit_series(coh, ups);
    verdicts["upsilon_z_polynomial"] = true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NonPolynomialUpsilon)
      throw;
    res["upsilon_error"] = error_json(e.code(), e.what());
    verdicts["upsilon_z_polynomial"] = false;
  }

  if (connection) {
    bool z_free = true, consistent = true;
    Json qm = Json::object();
    for (std::size_t i = 0; i < model.m(); ++i) {
      const std::string key = std::to_string(i + 1);
      try {
        MatrixSeries C = connection_from_u(coh, i, F, degrees, exec);
        consistent = consistent && connection_classes(coh, C) == seidel_from_tau(coh, i, tau);
        qm[key] = matrix_series_json(model, basis_matrices(coh, C));
      } catch (const Error& e) {
        if (e.code() == ErrorCode::ZDependentConnection)
          z_free = false;
        else if (e.code() == ErrorCode::NotGlobal)
          consistent = false;
        else
          throw;
        qm[key] = error_json(e.code(), e.what());
      }
    }
    res["quantum_multiplication"] = qm;
    verdicts["connection_z_free"] = z_free;
    verdicts["seidel_consistency"] = z_free && consistent;
  }
  return Json{{"results", res}, {"verdicts", verdicts}};
}

Json qcheck_payload(const ToricModel& model, const BigRat& cutoff, Execution exec) {
  LocalizedSeries I = ifun_series(model, cutoff, exec);
  std::size_t bad = nonzero_terms(quantum_relation_residual(model, I, exec));
  Json res, verdicts;
  res["relation"] = "D1...Dm I = (Qy)^(1,...,1) I(lambda - z(1,...,1))";
  res["nonzero_residual_terms"] = bad;
  res["terms"] = I.size();
  verdicts["quantum_relation"] = bad == 0;
  return Json{{"results", res}, {"verdicts", verdicts}};
}

bool spot_check_ifun(const ToricModel& model, const Json& payload, std::size_t samples,
                     unsigned seed) {
  const Json* series = nullptr;
  if (auto r = payload.find("results"); r != payload.end())
    if (auto s = r->find("I"); s != r->end() && s->is_array())
      series = &*s;
  if (!series)
    return false;
  if (series->empty())
    return true;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_term(0, series->size() - 1);
  std::uniform_int_distribution<std::size_t> pick_point(0, model.points.size() - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    const Json& term = (*series)[pick_term(rng)];
    const std::size_t x = pick_point(rng);
    Degree d;
    try {
      d = term.at("degree").get<Degree>();
      const std::string& stored =
          term.at("value").at(point_key(model.points[x])).get_ref<const std::string&>();
      if (stored != function_string(model, ifun_coeff(model, d, x)))
        return false;
    } catch (const std::exception&) {
      return false;
    }
  }
  return true;
}

CommandResult run_command(const CommandOptions& opts) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  CommandResult out;
  Json& rep = out.report;
  Json echo;
  echo["name"] = opts.command;
  echo["fan"] = opts.fan_path;
  if (opts.command != "check" && opts.command != "shift")
    echo["cutoff"] = rational_json(opts.cutoff);
  if (opts.omega)
    echo["omega"] = rationals_json(*opts.omega);
  if (opts.k)
    echo["k"] = *opts.k;
  if (opts.l)
    echo["l"] = *opts.l;
  if (opts.command == "mirror")
    echo["connection"] = opts.connection;
  rep["command"] = echo;

  auto finish = [&](int code) {
    if (opts.timing) {
      double secs = std::chrono::duration<double>(Clock::now() - start).count();
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", secs);
      rep["timing"] = Json{{"seconds", std::string(buf)}, {"threads", max_threads()}};
    }
    out.exit_code = code;
    return out;
  };

  try {
    static const std::vector<std::string> known = {"check", "ifun",   "flowcheck",
                                                   "shift", "mirror", "qcheck"};
    if (std::find(known.begin(), known.end(), opts.command) == known.end())
      throw Error(ErrorCode::InvalidArgument, "unknown command '" + opts.command + "'");
    if (opts.cutoff < 0)
      throw Error(ErrorCode::InvalidArgument, "cutoff must be non-negative");

    FanFile file = read_fan_file(opts.fan_path);
    Fan fan = file.to_fan();
    auto omega = opts.omega ? opts.omega : file.omega;
    rep["fan_hash"] = fan_hash(fan);

    Json payload;
    if (opts.command == "check") {
      payload = check_payload(fan, omega);
    } else if (opts.command == "shift") {
      if (!opts.k)
        throw Error(ErrorCode::InvalidArgument, "shift needs --k");
      payload = shift_payload(build_model(fan, Chart::sliced, omega), *opts.k, opts.l);
    } else {
      ToricModel model = build_model(fan, Chart::sliced, omega);
      rep["cutoff"] = rational_json(opts.cutoff);
      rep["omega"] = rationals_json(model.omega);

      Json key;
      key["command"] = opts.command;
      key["version"] = kCommandVersion;
      key["fan_hash"] = rep["fan_hash"];
      key["cutoff"] = rep["cutoff"];
      key["omega"] = rep["omega"];
      if (opts.command == "mirror")
        key["connection"] = opts.connection;

      std::optional<ReportCache> cache;
      if (opts.use_cache) {
        if (auto dir = opts.cache_dir ? opts.cache_dir : ReportCache::default_dir())
          cache.emplace(*dir);
      }
      if (cache) {
        std::string warning;
        auto hit = cache->load(key, &warning);
        if (hit && opts.command == "ifun" &&
            !spot_check_ifun(model, *hit, 3, unsigned(std::stoul(
                                                  fnv1a_hex(key.dump()).substr(0, 8), nullptr, 16)))) {
          warning = "cache entry " + cache->entry_path(key).string() +
                    " failed re-verification; recomputing";
          hit.reset();
        }
        if (!warning.empty())
          out.warnings.push_back(warning);
        if (hit && hit->contains("results") && hit->contains("verdicts")) {
          payload = std::move(*hit);
          out.cache_hit = true;
        }
      }
      if (!out.cache_hit) {
        if (opts.command == "ifun")
          payload = ifun_payload(model, opts.cutoff, opts.exec);
        else if (opts.command == "flowcheck")
          payload = flowcheck_payload(model, opts.cutoff, opts.exec);
        else if (opts.command == "mirror")
          payload = mirror_payload(model, opts.cutoff, opts.connection, opts.exec);
        else
          payload = qcheck_payload(model, opts.cutoff, opts.exec);
        if (cache) {
          std::string warning;
          if (!cache->store(key, payload, &warning))
            out.warnings.push_back(warning);
        }
      }
    }
    rep["results"] = payload["results"];
    rep["verdicts"] = payload["verdicts"];
    rep["pass"] = all_pass(rep["verdicts"]);
    return finish(rep["pass"].get<bool>() ? 0 : 1);
  } catch (const Error& e) {
    rep["error"] = error_json(e.code(), e.what());
    rep["verdicts"] = Json::object();
    rep["pass"] = false;
    return finish(2);
  } catch (const std::exception& e) {
    rep["error"] = Json{{"code", "Internal"}, {"message", e.what()}};
    rep["verdicts"] = Json::object();
    rep["pass"] = false;
    return finish(2);
  }
}

} // namespace qtoric
