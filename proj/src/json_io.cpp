#include "orthostab/json_io.hpp"

namespace orthostab {

namespace {

Rational rational_from_json(const json& j, const char* what) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail(ErrorKind::InvalidInput, std::string(what) + ": expected an integer or a 'p/q' string");
}

}  // namespace

json scalar_to_json(const ExactScalar& x) {
  return json{{"a", format_rational(x.a)},
              {"b", format_rational(x.b)},
              {"c", format_rational(x.c)},
              {"d", format_rational(x.d)}};
}

json scalar_to_json(const FloatScalar& x) { return json{{"re", x.real()}, {"im", x.imag()}}; }

ExactScalar exact_scalar_from_json(const json& j) {
  if (j.is_number_integer() || j.is_string())
    return ExactScalar(rational_from_json(j, "scalar"));
  if (j.is_number_float())
    fail(ErrorKind::InvalidInput, "exact backend cannot take float literals; use 'p/q' strings");
  if (j.is_object()) {
    if (j.contains("re") || j.contains("im"))
      fail(ErrorKind::InvalidInput, "float scalar form given where an exact scalar is required");
    ExactScalar x;
    if (j.contains("a")) x.a = rational_from_json(j.at("a"), "a");
    if (j.contains("b")) x.b = rational_from_json(j.at("b"), "b");
    if (j.contains("c")) x.c = rational_from_json(j.at("c"), "c");
    if (j.contains("d")) x.d = rational_from_json(j.at("d"), "d");
    return x;
  }
  fail(ErrorKind::InvalidInput, "unrecognized scalar form");
}

FloatScalar float_scalar_from_json(const json& j) {
  if (j.is_number()) return FloatScalar(j.get<double>(), 0.0);
  if (j.is_object() && (j.contains("re") || j.contains("im")))
    return FloatScalar(j.value("re", 0.0), j.value("im", 0.0));
  return exact_scalar_from_json(j).to_float();
}

json matrix_to_json(const EMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
    rows.push_back(row);
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"backend", "exact"}, {"entries", rows}};
}

json matrix_to_json(const FMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
    rows.push_back(row);
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"backend", "float"}, {"entries", rows}};
}

AnyMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("entries"))
    fail(ErrorKind::InvalidInput, "matrix JSON needs an 'entries' field");
  const int rows = j.value("rows", -1), cols = j.value("cols", -1);
  const std::string backend = j.value("backend", "exact");
  const json& entries = j.at("entries");
  if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
    fail(ErrorKind::InvalidInput, "matrix rows do not match the declared shape");
  AnyMatrix out;
  out.exact = backend == "exact";
  if (backend != "exact" && backend != "float")
    fail(ErrorKind::InvalidInput, "backend must be 'exact' or 'float'");
  if (out.exact) out.e = EMat(rows, cols); else out.f = FMat(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = entries.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      fail(ErrorKind::InvalidInput, "matrix columns do not match the declared shape");
    for (int k = 0; k < cols; ++k) {
      if (out.exact) out.e(i, k) = exact_scalar_from_json(row.at(k));
      else out.f(i, k) = float_scalar_from_json(row.at(k));
    }
  }
  return out;
}

EMat exact_matrix_from_json(const json& j) {
  AnyMatrix any = matrix_from_json(j);
  if (!any.exact) fail(ErrorKind::BackendUnavailable, "this operation needs an exact matrix");
  return any.e;
}

json segment_spec_to_json(const SegmentSpec& s) {
  return json{{"alpha", s.alpha}, {"mu", s.mu}};
}

SegmentSpec segment_spec_from_json(const json& j) {
  SegmentSpec s;
  if (!j.contains("alpha") || !j.contains("mu"))
    fail(ErrorKind::InvalidInput, "spec needs 'alpha' and 'mu' arrays");
  s.alpha = j.at("alpha").get<std::vector<int>>();
  s.mu = j.at("mu").get<std::vector<int>>();
  s.validate();
  return s;
}

json canonical_spec_to_json(const CanonicalSpec& s) {
  json out;
  switch (s.kind) {
    case CanonicalCase::NonzeroPair: out["case"] = "nonzero"; break;
    case CanonicalCase::Nilpotent: out["case"] = "nilpotent"; break;
    case CanonicalCase::OrthogonalGeneric: out["case"] = "orth-generic"; break;
    case CanonicalCase::UnipotentSigned: out["case"] = "unipotent"; break;
  }
  out["alpha"] = s.segments.alpha;
  out["mu"] = s.segments.mu;
  if (s.kind == CanonicalCase::NonzeroPair || s.kind == CanonicalCase::OrthogonalGeneric)
    out["lambda"] = scalar_to_json(s.lambda);
  if (s.exp_lambda) out["exp_lambda"] = scalar_to_json(*s.exp_lambda);
  if (s.kind == CanonicalCase::UnipotentSigned) out["epsilon"] = s.epsilon;
  return out;
}

CanonicalSpec canonical_spec_from_json(const json& j) {
  CanonicalSpec s;
  const std::string kind = j.value("case", "");
  if (kind == "nonzero") s.kind = CanonicalCase::NonzeroPair;
  else if (kind == "nilpotent") s.kind = CanonicalCase::Nilpotent;
  else if (kind == "orth-generic") s.kind = CanonicalCase::OrthogonalGeneric;
  else if (kind == "unipotent") s.kind = CanonicalCase::UnipotentSigned;
  else fail(ErrorKind::InvalidInput, "case must be nonzero|nilpotent|orth-generic|unipotent");
  s.segments = segment_spec_from_json(j);
  if (j.contains("lambda")) s.lambda = exact_scalar_from_json(j.at("lambda"));
  if (j.contains("exp_lambda")) s.exp_lambda = exact_scalar_from_json(j.at("exp_lambda"));
  if (j.contains("epsilon")) s.epsilon = j.at("epsilon").get<int>();
  s.validate();
  return s;
}

json toeplitz_to_json(const ToeplitzElement& e) {
  json blocks = json::object();
  for (int r = 0; r < e.spec.count(); ++r)
    for (int s = 0; s < e.spec.count(); ++s) {
      json list = json::array();
      for (const EMat& m : e.blocks[r][s]) list.push_back(matrix_to_json(m));
      blocks[std::to_string(r + 1) + "," + std::to_string(s + 1)] = list;
    }
  return json{{"spec", segment_spec_to_json(e.spec)}, {"blocks", blocks}};
}

namespace {

std::pair<int, int> parse_block_key(const std::string& key, int n) {
  auto comma = key.find(',');
  if (comma == std::string::npos) fail(ErrorKind::InvalidInput, "block keys look like 'r,s'");
  int r = 0, s = 0;
  try {
    r = std::stoi(key.substr(0, comma));
    s = std::stoi(key.substr(comma + 1));
  } catch (const std::exception&) {
    fail(ErrorKind::InvalidInput, "block keys look like 'r,s'");
  }
  if (r < 1 || s < 1 || r > n || s > n) fail(ErrorKind::InvalidInput, "block key out of range");
  return {r - 1, s - 1};
}

}  // namespace

ToeplitzElement toeplitz_from_json(const json& j) {
  SegmentSpec spec = segment_spec_from_json(j.at("spec"));
  ToeplitzElement e = zero_patterned(spec);
  if (j.contains("blocks")) {
    for (const auto& [key, list] : j.at("blocks").items()) {
      auto [r, s] = parse_block_key(key, spec.count());
      if (static_cast<int>(list.size()) != b_min(spec, r, s))
        fail(ErrorKind::InvalidInput, "block '" + key + "' needs min(alpha_r, alpha_s) matrices");
      for (int k = 0; k < b_min(spec, r, s); ++k) {
        EMat m = exact_matrix_from_json(list.at(k));
        if (m.rows() != spec.mu[r] || m.cols() != spec.mu[s])
          fail(ErrorKind::InvalidInput, "block '" + key + "' has the wrong shape");
        e.coeff(r, s, k) = m;
      }
    }
  }
  return e;
}

json problem_to_json(const CongruenceProblem& p) {
  auto data = [](const AltToeplitzData& d) {
    json per_segment = json::array();
    for (const auto& seg : d.coeff) {
      json list = json::array();
      for (const EMat& m : seg) list.push_back(matrix_to_json(m));
      per_segment.push_back(list);
    }
    return per_segment;
  };
  return json{{"spec", segment_spec_to_json(p.spec)}, {"B", data(p.b)}, {"C", data(p.c)}};
}

namespace {

AltToeplitzData alt_data_from_json(const SegmentSpec& spec, const json& j, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != spec.count())
    fail(ErrorKind::InvalidInput, std::string(what) + " needs one coefficient list per segment");
  std::vector<std::vector<EMat>> coeff(spec.count());
  for (int r = 0; r < spec.count(); ++r) {
    const json& list = j.at(r);
    if (!list.is_array() || static_cast<int>(list.size()) != spec.alpha[r])
      fail(ErrorKind::InvalidInput, std::string(what) + " segment " + std::to_string(r + 1) +
                                        " needs alpha_r coefficients");
    for (const json& m : list) coeff[r].push_back(exact_matrix_from_json(m));
  }
  return make_alt_data(spec, std::move(coeff));
}

}  // namespace

CongruenceProblem problem_from_json(const json& j) {
  SegmentSpec spec = segment_spec_from_json(j.at("spec"));
  CongruenceProblem p{spec, alt_data_from_json(spec, j.at("B"), "B"),
                      alt_data_from_json(spec, j.at("C"), "C")};
  p.validate();
  return p;
}

json free_data_to_json(const FreeData& f, const SegmentSpec&) {
  json below = json::object();
  for (const auto& [key, list] : f.below) {
    json arr = json::array();
    for (const EMat& m : list) arr.push_back(matrix_to_json(m));
    below[std::to_string(key.first + 1) + "," + std::to_string(key.second + 1)] = arr;
  }
  json seeds = json::array();
  for (const EMat& m : f.seeds) seeds.push_back(matrix_to_json(m));
  json zees = json::array();
  for (const auto& list : f.zees) {
    json arr = json::array();
    for (const EMat& m : list) arr.push_back(matrix_to_json(m));
    zees.push_back(arr);
  }
  return json{{"below", below}, {"seeds", seeds}, {"zees", zees}};
}

FreeData free_data_from_json(const json& j) {
  FreeData f;
  if (j.contains("below"))
    for (const auto& [key, list] : j.at("below").items()) {
      auto comma = key.find(',');
      if (comma == std::string::npos) fail(ErrorKind::InvalidInput, "below keys look like 'r,s'");
      int r = std::stoi(key.substr(0, comma)) - 1;
      int s = std::stoi(key.substr(comma + 1)) - 1;
      std::vector<EMat> coeffs;
      for (const json& m : list) coeffs.push_back(exact_matrix_from_json(m));
      f.below[{r, s}] = std::move(coeffs);
    }
  if (j.contains("seeds"))
    for (const json& m : j.at("seeds")) f.seeds.push_back(exact_matrix_from_json(m));
  if (j.contains("zees"))
    for (const json& list : j.at("zees")) {
      std::vector<EMat> zs;
      for (const json& m : list) zs.push_back(exact_matrix_from_json(m));
      f.zees.push_back(std::move(zs));
    }
  return f;
}

json certificate_to_json(const Certificate& c) {
  return json{{"exact", c.exact},
              {"orthogonal", c.orthogonal},
              {"stabilizes", c.stabilizes},
              {"orth_residual", c.orth_residual},
              {"stab_residual", c.stab_residual}};
}

}  // namespace orthostab
