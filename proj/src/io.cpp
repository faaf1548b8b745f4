#include "multisecant/io.hpp"

#include <fstream>
#include <sstream>

namespace msec {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\n") - b + 1);
}

Json dim(int d) { return d < 0 ? Json(nullptr) : Json(d); }

template <class F>
std::vector<MultiPoly<F>> parse_all(const Json& list, const RingPtr<F>& ring) {
  if (!list.is_array()) throw ParseError("expected an array of polynomial strings");
  std::vector<MultiPoly<F>> out;
  for (auto& s : list) {
    if (!s.is_string()) throw ParseError("polynomials must be given as strings");
    out.push_back(parse_poly<F>(s.get<std::string>(), ring));
  }
  return out;
}

template <class F>
Variety<F> read_typed(const Json& doc, typename FieldTraits<F>::Context ctx) {
  const int n = doc.at("ambient").get<int>();
  if (n < 1 || n + 1 > kMaxVars) throw ParseError("ambient dimension out of range");
  auto ring = make_ring<F>(n + 1, ctx);
  auto gens = parse_all<F>(doc.at("generators"), ring);
  std::optional<Parametrization<F>> par;
  if (doc.contains("parametrization")) {
    const Json& pj = doc["parametrization"];
    const int k = pj.at("params").get<int>();
    if (k < 1 || k > kMaxVars) throw ParseError("parametrization arity out of range");
    par = Parametrization<F>{k, parse_all<F>(pj.at("coords"), make_ring<F>(k, ctx))};
  }
  return Variety<F>(n, std::move(gens), std::move(par));
}

}  // namespace

VarietyDocument read_variety(const Json& doc, std::uint32_t prime) {
  try {
    FieldTag tag = parse_field_tag(doc.value("field", std::string("QQ")));
    std::optional<Variety<Fp>> X;
    if (tag.rational)
      X = reduce_mod(read_typed<Rational>(doc, {}), prime);
    else
      X = read_typed<Fp>(doc, {tag.prime});
    VarietyDocument out{tag, std::move(*X), {}};
    const std::uint32_t p = out.variety.ring()->field.p;
    if (doc.contains("lines"))
      for (auto& l : doc["lines"]) {
        if (l.is_string()) {
          out.lines.push_back(parse_line(l.get<std::string>(), out.variety.ambient(), p));
          continue;
        }
        auto forms = parse_all<Fp>(l, out.variety.ring());
        out.lines.push_back(Line<Fp>::from_equations(forms, out.variety.ambient()));
      }
    for (auto& l : out.lines)
      if (secant_length(out.variety, l) != kInfinite) throw DomainError("a listed line is not on the variety");
    return out;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed variety document: ") + e.what());
  }
}

VarietyDocument read_variety_file(const std::string& path, std::uint32_t prime) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return read_variety(doc, prime);
}

std::vector<std::string> line_equations(const Line<Fp>& line) {
  const int n = line.ambient();
  const Fp zero(0, line.point(0)(0).modulus());
  MatrixP k = kernel(MatrixP(line.basis()), zero);
  auto R = make_ring_gf(n + 1, zero.modulus());
  std::vector<std::string> out;
  for (Eigen::Index c = 0; c < k.cols(); ++c) {
    PolyP f(R);
    for (int i = 0; i <= n; ++i) f = f + PolyP::variable(R, i).scaled(k(i, c));
    out.push_back(f.to_string());
  }
  return out;
}

Json variety_json(const Variety<Fp>& X, const std::vector<Line<Fp>>& lines) {
  Json j;
  j["ambient"] = X.ambient();
  j["field"] = "GF " + std::to_string(X.ring()->field.p);
  j["generators"] = Json::array();
  for (auto& g : X.generators()) j["generators"].push_back(g.to_string());
  if (auto& par = X.parametrization()) {
    Json pj;
    pj["params"] = par->params;
    pj["coords"] = Json::array();
    for (auto& c : par->coords) pj["coords"].push_back(c.to_string());
    j["parametrization"] = pj;
  }
  if (!lines.empty()) {
    j["lines"] = Json::array();
    for (auto& l : lines) j["lines"].push_back(line_equations(l));
  }
  return j;
}

Line<Fp> parse_line(const std::string& text, int ambient, std::uint32_t prime) {
  const std::string t = trim(text);
  if (t.empty()) throw ParseError("empty line description");
  auto ring = make_ring_gf(ambient + 1, prime);
  if (t.front() == '[') {
    std::vector<VectorP> pts;
    std::size_t pos = 0;
    while ((pos = t.find('[', pos)) != std::string::npos) {
      const auto end = t.find(']', pos);
      if (end == std::string::npos) throw ParseError("unterminated point", pos);
      auto parts = split(t.substr(pos + 1, end - pos - 1), ':');
      if (static_cast<int>(parts.size()) != ambient + 1) throw ParseError("point has the wrong number of coordinates", pos);
      VectorP v(ambient + 1);
      for (int i = 0; i <= ambient; ++i) {
        auto c = parse_poly<Fp>(trim(parts[static_cast<std::size_t>(i)]), ring);
        if (c.total_degree() > 0) throw ParseError("point coordinates must be numbers", pos);
        v(i) = c.coefficient(Monomial{});
      }
      pts.push_back(std::move(v));
      pos = end;
    }
    if (pts.size() != 2) throw ParseError("a line needs exactly two points");
    return Line<Fp>(pts[0], pts[1]);
  }
  std::vector<PolyP> forms;
  for (auto& chain : split(t, ',')) {
    auto pieces = split(chain, '=');
    if (pieces.size() < 2) throw ParseError("expected an equation in '" + chain + "'");
    std::vector<PolyP> sides;
    for (auto& piece : pieces) sides.push_back(parse_poly<Fp>(trim(piece), ring));
    for (std::size_t i = 0; i + 1 < sides.size(); ++i) forms.push_back(sides[i] - sides[i + 1]);
  }
  return Line<Fp>::from_equations(forms, ambient);
}

CharMatrix read_char_matrix(const Json& doc, std::uint32_t prime) {
  try {
    const Json& rows = doc.at("char_matrix");
    if (!rows.is_array() || rows.size() != 3) throw ParseError("char_matrix needs three rows");
    auto R = make_ring_gf(2, prime);
    CharMatrix M;
    for (std::size_t i = 0; i < 3; ++i) {
      if (!rows[i].is_array() || rows[i].size() != 2) throw ParseError("char_matrix rows need two entries");
      for (std::size_t j = 0; j < 2; ++j) {
        PolyP l = parse_poly<Fp>(rows[i][j].get<std::string>(), R);
        if (!l.is_zero() && (!l.is_homogeneous() || l.total_degree() != 1))
          throw ParseError("char_matrix entries must be linear forms in x0, x1");
        M.entries[i][j] = BinaryForm<Fp>(1, {l.coefficient(Monomial::variable(1)), l.coefficient(Monomial::variable(0))});
      }
    }
    return M;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed characteristic matrix: ") + e.what());
  }
}

Json to_json(const FanoReport& r) {
  Json j;
  j["fano_dimension"] = dim(r.dimension);
  j["empty"] = r.dimension < 0;
  j["seeds_agree"] = r.seeds_agree;
  j["charts"] = Json::array();
  for (auto& c : r.charts)
    j["charts"].push_back({{"seed", c.seed},
                           {"dimension", dim(c.dimension)},
                           {"slices", c.detail.slices},
                           {"witnessed", c.detail.witnessed},
                           {"pairs", c.detail.pairs}});
  return j;
}

Json to_json(const OrderReport& r) {
  Json j;
  j["defined"] = r.defined;
  j["q"] = r.defined ? Json(r.q) : Json(nullptr);
  j["per_point"] = Json::array();
  for (auto q : r.per_point) j["per_point"].push_back(q < 0 ? Json(nullptr) : Json(q));
  j["unsaturated"] = Json::array();
  for (auto q : r.unsaturated) j["unsaturated"].push_back(q < 0 ? Json(nullptr) : Json(q));
  j["saturation_changed"] = r.saturation_changed;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const SecancyReport& r) {
  Json j;
  j["k"] = r.k;
  j["sigma"] = dim(r.sigma);
  j["sigma_true"] = dim(r.sigma_true);
  j["fano_dimension"] = dim(r.fano_dimension);
  j["contains_lines_in_x"] = r.contains_lines_in_x;
  j["seeds_agree"] = r.seeds_agree;
  j["seeds"] = r.seeds;
  if (r.order) j["q"] = r.order->defined ? Json(r.order->q) : Json(nullptr);
  j["runs"] = Json::array();
  for (auto& run : r.runs) {
    Json rj{{"seed", run.seed},
            {"sigma", dim(run.sigma)},
            {"sigma_true", dim(run.sigma_true)},
            {"fano", dim(run.fano)},
            {"true_slices", run.true_detail.slices},
            {"true_pairs", run.true_detail.pairs},
            {"fano_pairs", run.fano_detail.pairs}};
    if (!run.true_note.empty()) rj["note"] = run.true_note;
    j["runs"].push_back(std::move(rj));
  }
  if (r.order) j["order"] = to_json(*r.order);
  return j;
}

Json to_json(const CharMatrix& M) {
  Json rows = Json::array();
  for (int i = 0; i < 3; ++i) rows.push_back({M(i, 0).to_string(), M(i, 1).to_string()});
  return rows;
}

Json to_json(const FocalReport& r) {
  Json j;
  j["phi12"] = r.phi12.to_string();
  j["phi13"] = r.phi13.to_string();
  j["phi23"] = r.phi23.to_string();
  j["degenerate"] = r.degenerate;
  j["common_factor"] = r.degenerate ? Json(nullptr) : Json(r.common_factor.to_string());
  j["focal_points"] = Json::array();
  for (auto& f : r.focal_points)
    j["focal_points"].push_back({{"point", "[" + std::to_string(f.x0.signed_value()) + ":" + std::to_string(f.x1.signed_value()) + "]"},
                                 {"multiplicity", f.multiplicity}});
  j["needs_extension"] = r.needs_extension;
  j["G"] = r.g.signed_value();
  if (r.fixed_direction) {
    Json v = Json::array();
    for (auto& c : *r.fixed_direction) v.push_back(c.signed_value());
    j["fixed_direction"] = v;
  } else {
    j["fixed_direction"] = nullptr;
  }
  j["note"] = r.note;
  return j;
}

Json to_json(const LineAnalysis& a) {
  Json j;
  j["line"] = line_equations(a.line);
  j["char_matrix"] = to_json(a.matrix);
  j["focal"] = to_json(a.focal);
  if (a.reducedness) {
    Json pts = Json::array();
    for (auto& P : a.reducedness->points) pts.push_back(P.to_string());
    j["fano_reduced"] = {{"reduced", a.reducedness->reduced},
                         {"points", pts},
                         {"multiplicities", a.reducedness->multiplicities}};
  }
  return j;
}

Json to_json(const CheckReport& r) {
  Json j;
  j["name"] = r.name;
  j["seed"] = r.seed;
  j["complete"] = r.complete;
  j["pass"] = r.pass;
  j["items"] = Json::array();
  for (auto& i : r.items)
    j["items"].push_back({{"what", i.what}, {"expected", i.expected}, {"measured", i.measured}, {"pass", i.pass}});
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

Json to_json(const Expectations& e) {
  Json j;
  j["row"] = e.row;
  j["dimension"] = e.dimension;
  j["degree"] = e.degree;
  j["smooth"] = e.smooth;
  if (e.fano_dimension) j["fano_dimension"] = dim(*e.fano_dimension);
  if (e.fano_degree) j["fano_degree"] = *e.fano_degree;
  j["secancy"] = Json::array();
  for (auto& s : e.secancy) {
    Json sj{{"k", s.k}};
    if (s.sigma) sj["sigma"] = dim(*s.sigma);
    if (s.sigma_true) sj["sigma_true"] = dim(*s.sigma_true);
    j["secancy"].push_back(std::move(sj));
  }
  j["orders"] = Json::array();
  for (auto& o : e.orders) j["orders"].push_back({{"k", o.k}, {"q", o.q}});
  if (e.in_quadric) j["in_quadric"] = *e.in_quadric;
  if (e.in_cubic) j["in_cubic"] = *e.in_cubic;
  j["stretch"] = e.stretch;
  return j;
}

double timing_seconds(const FanoReport& r) {
  double s = 0;
  for (auto& c : r.charts) s += c.seconds;
  return s;
}

double timing_seconds(const SecancyReport& r) {
  double s = 0;
  for (auto& run : r.runs) s += run.seconds;
  return s;
}

Json expectations_table() {
  Json j;
  for (auto& name : corpus_names()) j[name] = to_json(build_entry(name, 1).expected);
  return j;
}

}  // namespace msec
