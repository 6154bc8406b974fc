#include "latcvx/io.hpp"

#include <fstream>
#include <iostream>

#include "latcvx/errors.hpp"

namespace latcvx::io {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ParseError(what);
}

void add_decimal(json& j, const std::string& key, const Rational& r, const OutputOptions& opt) {
  if (opt.decimal_digits) j[key + "_decimal"] = r.decimal(*opt.decimal_digits);
}

json segment_json(const RatVector& a, const RatVector& b) {
  return json::array({to_json(a), to_json(b)});
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(j.get<unsigned long>());
    return Rational(j.get<long>());
  }
  throw ParseError("expected a rational string, got " + std::string(j.type_name()) +
                   (j.is_number_float() ? " (floats are not exact; write \"p/q\")" : ""));
}

json to_json(const Rational& r) { return r.str(); }

RatVector vector_from_json(const json& j) {
  require(j.is_array() && !j.empty(), "expected a nonempty array of rationals");
  RatVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

json to_json(const RatVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

RatMatrix matrix_from_json(const json& j) {
  require(j.is_array() && !j.empty(), "expected a nonempty array of rows");
  std::vector<RatVector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  for (const auto& r : rows) require(r.dim() == rows.front().dim(), "ragged matrix");
  return RatMatrix::from_rows(rows);
}

json to_json(const RatMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

json to_json(const Facet& f) { return json{{"normal", to_json(f.normal)}, {"offset", to_json(f.offset)}}; }

Polytope polytope_from_json(const json& doc) {
  require(doc.is_object(), "polytope must be a JSON object");
  const json& j = doc.contains("polytope") ? doc.at("polytope") : doc;
  require(j.is_object(), "polytope must be a JSON object");
  const bool has_v = j.contains("vertices");
  const bool has_h = j.contains("inequalities");
  require(has_v || has_h, "polytope needs \"vertices\" or \"inequalities\"");
  std::optional<std::size_t> dim;
  if (j.contains("dim")) {
    require(j.at("dim").is_number_unsigned() && j.at("dim").get<std::size_t>() > 0,
            "\"dim\" must be a positive integer");
    dim = j.at("dim").get<std::size_t>();
  }
  auto check_dim = [&](std::size_t n) {
    require(!dim || *dim == n, "entry dimension does not match \"dim\"");
  };
  std::vector<RatVector> pts;
  if (has_v) {
    require(j.at("vertices").is_array() && !j.at("vertices").empty(), "\"vertices\" must be a nonempty array");
    for (const auto& v : j.at("vertices")) {
      pts.push_back(vector_from_json(v));
      check_dim(pts.back().dim());
      require(pts.back().dim() == pts.front().dim(), "vertices of mixed dimension");
    }
  }
  std::vector<Facet> ineq;
  if (has_h) {
    require(j.at("inequalities").is_array() && !j.at("inequalities").empty(),
            "\"inequalities\" must be a nonempty array");
    for (const auto& f : j.at("inequalities")) {
      require(f.is_object() && f.contains("normal") && f.contains("offset"),
              "inequality needs \"normal\" and \"offset\"");
      ineq.push_back(Facet{vector_from_json(f.at("normal")), rational_from_json(f.at("offset"))});
      check_dim(ineq.back().normal.dim());
      require(ineq.back().normal.dim() == ineq.front().normal.dim(), "normals of mixed dimension");
    }
  }
  if (!has_h) return Polytope::hull(pts);
  Polytope from_h = Polytope::from_inequalities(ineq);
  // both descriptions (our own output format): they must describe the same body
  if (has_v) require(Polytope::hull(pts) == from_h, "vertices and inequalities disagree");
  return from_h;
}

json to_json(const Polytope& p) {
  json v = json::array();
  for (const auto& x : p.vertices()) v.push_back(to_json(x));
  json h = json::array();
  for (const auto& f : p.facets()) h.push_back(to_json(f));
  return json{{"dim", p.dim()}, {"vertices", v}, {"inequalities", h}};
}

Lattice lattice_from_json(const json& doc) {
  require(doc.is_object(), "lattice must be a JSON object");
  const json& j = doc.contains("lattice") ? doc.at("lattice") : doc;
  require(j.is_object(), "lattice must be a JSON object");
  if (!j.contains("basis") && j.contains("gram")) return lattice_from_gram_json(j);
  require(j.contains("basis"), "lattice needs \"basis\"");
  RatMatrix basis;
  if (j.at("basis").is_string()) {
    require(j.at("basis").get<std::string>() == "identity", "\"basis\" string must be \"identity\"");
    require(j.contains("dim") && j.at("dim").is_number_unsigned() && j.at("dim").get<std::size_t>() > 0,
            "identity basis needs a positive \"dim\"");
    basis = RatMatrix::identity(j.at("dim").get<std::size_t>());
  } else {
    basis = matrix_from_json(j.at("basis")).transpose();
    require(basis.is_square(), "basis must have d vectors of dimension d");
  }
  if (j.contains("gram")) return Lattice(basis, matrix_from_json(j.at("gram")));
  return Lattice(basis);
}

Lattice lattice_from_gram_json(const json& doc) {
  require(doc.is_object() && doc.contains("gram"), "expected an object with \"gram\"");
  const RatMatrix g = matrix_from_json(doc.at("gram"));
  require(g.is_square(), "gram must be square");
  return Lattice::from_gram(g);
}

json to_json(const Lattice& l) {
  json j{{"basis", to_json(l.basis().transpose())}};
  if (l.has_explicit_gram()) j["gram"] = to_json(l.gram());
  return j;
}

json to_json(const FunctionalResult& r, const OutputOptions& opt) {
  json dirs = json::array();
  for (const auto& d : r.directions) dirs.push_back(to_json(d));
  json j{{"value", to_json(r.value)}, {"directions", dirs}, {"span_dim", r.span_dim}};
  add_decimal(j, "value", r.value, opt);
  return j;
}

json to_json(const ReducedCertificate& c, const OutputOptions& opt) {
  json w = json::array();
  for (const auto& x : c.witnesses)
    w.push_back(json{{"vertex", to_json(x.vertex)}, {"direction", to_json(x.direction)}});
  json failing = json::array();
  for (const auto& v : c.failing_vertices) failing.push_back(to_json(v));
  return json{{"property", "reduced"},
              {"verdict", c.verdict},
              {"width", to_json(c.width, opt)},
              {"witnesses", w},
              {"counter_witness", c.counter_witness ? to_json(*c.counter_witness) : json(nullptr)},
              {"failing_vertices", failing}};
}

json to_json(const CompleteCertificate& c, const OutputOptions& opt) {
  json w = json::array();
  for (const auto& x : c.witnesses)
    w.push_back(json{{"facet", to_json(x.facet)},
                     {"direction", to_json(x.direction)},
                     {"segment", segment_json(x.start, x.end)},
                     {"endpoint_in_facet", x.start_in_facet ? "start" : "end"}});
  json failing = json::array();
  for (std::size_t f : c.failing_facets) failing.push_back(f);
  json counter = nullptr;
  if (c.counter_witness) {
    counter = json::object();
    counter["facet_index"] = *c.counter_witness;
  }
  return json{{"property", "complete"},
              {"verdict", c.verdict},
              {"diameter", to_json(c.diameter, opt)},
              {"witnesses", w},
              {"counter_witness", counter},
              {"failing_facets", failing}};
}

json to_json(const TriangleClass& c) {
  json j{{"reduced", c.reduced}, {"complete", c.complete}, {"consistent", c.consistent}};
  if (c.canonical_params) {
    j["canonical_params"] = json::array({to_json(c.canonical_params->first), to_json(c.canonical_params->second)});
  } else {
    j["canonical_params"] = nullptr;
  }
  if (c.normalization) {
    j["normalization"] = json{{"unimodular", to_json(c.normalization->unimodular)},
                              {"dilation", to_json(c.normalization->dilation)},
                              {"translation", to_json(c.normalization->translation)}};
  }
  return j;
}

json to_json(const GalleryEntry& e) {
  json params = json::array();
  for (const auto& p : e.params) params.push_back(to_json(p));
  json expected = json::object();
  if (e.expected.reduced) expected["reduced"] = *e.expected.reduced;
  if (e.expected.complete) expected["complete"] = *e.expected.complete;
  if (e.expected.width) expected["width"] = to_json(*e.expected.width);
  if (e.expected.diameter) expected["diameter"] = to_json(*e.expected.diameter);
  return json{{"name", e.name},
              {"params", params},
              {"polytope", to_json(e.polytope)},
              {"lattice", to_json(e.lattice)},
              {"expected", expected}};
}

json document(const Polytope& p, const Lattice& l) {
  return json{{"polytope", to_json(p)}, {"lattice", to_json(l)}};
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

void write_output(const json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
  if (!out) throw ParseError("write failed for '" + path + "'");
}

}  // namespace latcvx::io
