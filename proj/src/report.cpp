#include "report.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

namespace weylkit {

namespace {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::IoError, "cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::IoError, "cannot parse '" + path + "': " + e.what());
  }
  return j;
}

std::vector<Vec> parse_vectors(const Json& j) {
  std::vector<Vec> out;
  for (const Json& row : j) {
    Vec v;
    for (const Json& x : row) v.push_back(x.get<i64>());
    out.push_back(std::move(v));
  }
  return out;
}

SemisimplePoint parse_point(const Json& j, int rank) {
  SemisimplePoint p;
  if (j.is_string()) {
    p = SemisimplePoint::parse(j.get<std::string>());
  } else if (j.is_array()) {
    for (const Json& x : j)
      p.coords.push_back(x.is_string() ? parse_frac(x.get<std::string>())
                                       : Frac(x.get<i64>(), 1));
  } else {
    fail(Errc::InvalidArgument, "point must be a string or an array");
  }
  if (p.rank() != rank) fail(Errc::InvalidArgument, "point has wrong rank");
  return p;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Poly random_poly(std::mt19937_64& rng, int nvars, int max_degree) {
  Poly p(nvars);
  int terms = 1 + int(rng() % 5);
  for (int t = 0; t < terms; ++t) {
    Poly::Monomial m(nvars, 0);
    int degree = int(rng() % (max_degree + 1));
    for (int d = 0; d < degree; ++d) ++m[rng() % std::max(nvars, 1)];
    i64 c = i64(rng() % 9) - 4;
    if (c == 0) c = 1;
    p.set_coeff(m, p.coeff(m) + Rat(c));
  }
  return p;
}

}  // namespace

RunConfig RunConfig::from_json(const Json& j) {
  RunConfig cfg;
  if (j.contains("datum")) cfg.datum = j.at("datum");
  if (j.contains("q")) cfg.q = j.at("q").get<i64>();
  if (j.contains("tau")) cfg.tau = j.at("tau");
  if (j.contains("coeff")) cfg.coeff = j.at("coeff").get<std::string>();
  if (j.contains("ell")) cfg.ell = j.at("ell").get<i64>();
  if (j.contains("order_bound")) cfg.order_bound = j.at("order_bound").get<i64>();
  if (j.contains("weyl_cap")) cfg.weyl_cap = j.at("weyl_cap").get<i64>();
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (cfg.coeff != "qlbar" && cfg.coeff != "zlbar")
    fail(Errc::InvalidArgument, "coeff must be qlbar or zlbar");
  if (cfg.coeff == "zlbar" && !is_prime(cfg.ell))
    fail(Errc::InvalidArgument, "zlbar mode requires a prime ell");
  return cfg;
}

Json RunConfig::to_json() const {
  Json j;
  j["datum"] = datum;
  j["q"] = q;
  j["tau"] = tau;
  j["coeff"] = coeff;
  j["ell"] = ell;
  j["order_bound"] = order_bound;
  j["weyl_cap"] = weyl_cap;
  j["seed"] = seed;
  return j;
}

RootDatum resolve_datum(const Json& spec) {
  if (spec.is_string()) {
    std::string name = spec.get<std::string>();
    if (RootDatum::is_builtin_name(name)) return RootDatum::builtin(name);
    return resolve_datum(read_json_file(name));
  }
  if (spec.is_object()) {
    if (spec.contains("file")) return resolve_datum(read_json_file(spec.at("file")));
    int rank = spec.at("rank").get<int>();
    std::vector<Vec> sr = parse_vectors(spec.at("simple_roots"));
    std::vector<Vec> sc = parse_vectors(spec.at("simple_coroots"));
    std::string name = spec.value("name", "");
    return RootDatum::build(rank, sr, sc, name);
  }
  fail(Errc::InvalidArgument, "datum must be a name, a path, or an object");
}

IntMat resolve_tau(const RootDatum& rd, const Json& spec) {
  if (spec.is_string()) return FrobeniusDatum::named_tau(rd, spec.get<std::string>());
  if (spec.is_array()) {
    std::vector<Vec> rows = parse_vectors(spec);
    return IntMat::from_rows(rows);
  }
  fail(Errc::InvalidArgument, "tau must be a name or a matrix");
}

Session Session::open(const RunConfig& cfg) {
  RootDatum rd = resolve_datum(cfg.datum);
  WeylGroup W = WeylGroup::enumerate(rd, cfg.weyl_cap);
  FrobeniusDatum fr = FrobeniusDatum::build(rd, cfg.q, resolve_tau(rd, cfg.tau));
  CoeffMode mode = cfg.coeff == "zlbar" ? CoeffMode::zlbar(fr.p(), cfg.ell)
                                        : CoeffMode::qlbar(fr.p());
  if (mode.is_integral() && mode.ell == fr.p())
    fail(Errc::InvalidArgument, "ell must differ from the residue characteristic");
  return Session{std::move(rd), std::move(W), std::move(fr), mode};
}

Json datum_file_json(const RootDatum& rd) {
  Json j;
  j["rank"] = rd.rank();
  Json sr = Json::array(), sc = Json::array();
  for (int i = 0; i < rd.num_simple(); ++i) {
    sr.push_back(rd.simple_root(i));
    sc.push_back(rd.simple_coroot(i));
  }
  j["simple_roots"] = sr;
  j["simple_coroots"] = sc;
  j["name"] = rd.name();
  return j;
}

Json point_json(const SemisimplePoint& s) { return Json(s.str_coords()); }

Json word_json(const WeylGroup& W, int w) {
  Json out = Json::array();
  for (int i : W.word(w)) out.push_back(i + 1);
  return out;
}

std::vector<int> parse_word(const Json& j, int num_simple) {
  std::vector<int> word;
  if (j.is_string()) {
    std::string text = j.get<std::string>();
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ','))
      if (!token.empty()) word.push_back(std::stoi(token));
  } else if (j.is_array()) {
    for (const Json& x : j) word.push_back(x.get<int>());
  } else {
    fail(Errc::InvalidArgument, "word must be a string or array of 1-based indices");
  }
  for (int& i : word) {
    if (i < 1 || i > num_simple)
      fail(Errc::InvalidArgument, "word letter out of range (letters are 1-based)");
    --i;
  }
  return word;
}

Json block_json(const WeylGroup& W, const Block& b) {
  Json j;
  j["source"] = point_json(b.source);
  j["target"] = point_json(b.target);
  j["size"] = b.members.size();
  j["w_min"] = Json{{"word", word_json(W, b.w_min)}, {"length", W.length(b.w_min)}};
  j["w_max"] = Json{{"word", word_json(W, b.w_max)}, {"length", W.length(b.w_max)}};
  Json members = Json::array();
  for (int w : b.members) members.push_back(word_json(W, w));
  j["member_words"] = members;
  return j;
}

Json classification_json(const CartanClassification& c) {
  Json j;
  Json comps = Json::array();
  for (const CartanFactor& f : c.components) {
    Json fj;
    fj["type"] = f.label();
    if (!f.alias.empty()) fj["alias"] = f.alias;
    comps.push_back(fj);
  }
  j["components"] = comps;
  j["central_torus_rank"] = c.central_torus_rank;
  return j;
}

namespace {

Json fundamental_group_json(const RootDatum& rd) {
  auto derived = rd.fundamental_group(RootDatum::Pi1Mode::Derived);
  auto full = rd.fundamental_group(RootDatum::Pi1Mode::Full);
  Json j;
  j["derived"] = Json{{"invariant_factors", derived.invariant_factors},
                      {"order", derived.torsion_order}};
  j["full"] = Json{{"invariant_factors", full.invariant_factors},
                   {"torsion_order", full.torsion_order},
                   {"free_rank", full.free_rank}};
  return j;
}

Json datum_summary_json(const RootDatum& rd) {
  Json j = datum_file_json(rd);
  j["num_roots"] = rd.num_roots();
  j["classification"] = classification_json(rd.classify());
  j["fundamental_group"] = fundamental_group_json(rd);
  return j;
}

Json prime_tables_json(const RootDatum& rd, i64 ell) {
  PrimeTables pt = prime_tables(rd);
  Json j;
  j["bad_primes"] = pt.bad_primes;
  j["torsion_primes"] = pt.torsion_primes;
  j["pi1_torsion_order"] = pt.pi1_full_torsion_order;
  if (ell >= 2) j["condition_l"] = pt.condition_l(ell);
  return j;
}

Json gamma_json(const StabilizerData& st) {
  Json j;
  j["order"] = st.gamma_order();
  j["phi_s_size"] = st.phi_s.size();
  j["w_s_order"] = st.w_s.size();
  j["w_s_circ_order"] = st.w_s_circ.size();
  return j;
}

Json rational_json(const RationalClassReport& r) {
  Json j;
  j["representative"] = point_json(r.geometric_rep);
  j["stable"] = r.stable;
  j["rational_count"] = r.rational_count;
  j["twisted_orbit_count"] = r.twisted_orbit_count;
  if (r.h1_applies) {
    j["h1"] = Json{{"point", point_json(r.h1_point)},
                   {"invariant_factors", r.h1_structure.invariant_factors},
                   {"order", r.h1_structure.order}};
  }
  return j;
}

}  // namespace

Json cmd_validate(const Json& params) {
  RootDatum rd = resolve_datum(params.at("datum"));
  rd.validate();
  Json j;
  j["valid"] = true;
  j["datum"] = datum_summary_json(rd);
  return j;
}

Json cmd_dual(const Json& params) {
  RootDatum rd = resolve_datum(params.at("datum"));
  Json j;
  j["datum"] = datum_file_json(rd.dual());
  j["classification"] = classification_json(rd.dual().classify());
  return j;
}

Json cmd_weyl(const Json& params) {
  RootDatum rd = resolve_datum(params.at("datum"));
  i64 cap = params.value("weyl_cap", kDefaultWeylCap);
  WeylGroup W = WeylGroup::enumerate(rd, cap);
  int w0 = W.order() > 1 ? W.longest_element() : 0;
  Json j;
  j["order"] = W.order();
  j["num_simple"] = rd.num_simple();
  j["longest"] = Json{{"word", word_json(W, w0)}, {"length", W.length(w0)}};
  return j;
}

Json cmd_blocks(const Json& params) {
  RootDatum rd = resolve_datum(params.at("datum"));
  WeylGroup W = WeylGroup::enumerate(rd, params.value("weyl_cap", kDefaultWeylCap));
  SemisimplePoint s = parse_point(params.at("source"), rd.rank());
  SemisimplePoint t = params.contains("target") ? parse_point(params.at("target"), rd.rank()) : s;
  Json j;
  j["source"] = point_json(s);
  j["target"] = point_json(t);
  std::vector<Block> blocks = block_decomposition(s, t, W);
  Json arr = Json::array();
  for (const Block& b : blocks) arr.push_back(block_json(W, b));
  j["blocks"] = arr;
  if (params.value("groupoid", false)) {
    BlockGroupoid g = build_groupoid(orbit(s, W), W);
    Json gj;
    gj["objects"] = Json::array();
    for (const SemisimplePoint& p : g.objects) gj["objects"].push_back(point_json(p));
    i64 homs = 0;
    for (const auto& row : g.homs)
      for (const auto& hs : row) homs += i64(hs.size());
    gj["num_morphisms"] = homs;
    gj["checks"] = Json{{"associative", true}, {"identity", true}, {"bitorsor", true}};
    j["groupoid"] = gj;
  }
  return j;
}

Json cmd_endoscopy(const Json& params) {
  RootDatum rd = resolve_datum(params.at("datum"));
  WeylGroup W = WeylGroup::enumerate(rd, params.value("weyl_cap", kDefaultWeylCap));
  SemisimplePoint s = parse_point(params.at("point"), rd.rank());
  EndoscopicDatum e = endoscopic_group(s, rd, W);
  Json j;
  j["point"] = point_json(s);
  j["centralizer"] = Json{{"num_roots", e.centralizer_datum.num_roots()},
                          {"classification", classification_json(e.centralizer_datum.classify())}};
  j["h_datum"] = datum_file_json(e.h_datum);
  j["h_classification"] = classification_json(e.h_datum.classify());
  j["pi0_order"] = e.stab.gamma_order();
  j["gamma"] = gamma_json(e.stab);
  Json pin = Json::array();
  for (int amb : e.relative_pinning) pin.push_back(rd.roots()[amb]);
  j["relative_pinning_roots"] = pin;
  Json perms = Json::array();
  for (const auto& p : e.gamma_on_delta) perms.push_back(p);
  j["gamma_on_delta"] = perms;
  return j;
}

Json cmd_series(const Json& params) {
  RunConfig cfg = RunConfig::from_json(params);
  Session ses = Session::open(cfg);
  std::vector<GeometricClass> classes = geometric_classes(ses.fr, ses.W, ses.mode);
  Json arr = Json::array();
  for (const GeometricClass& cls : classes) {
    RationalClassReport r = rational_classes(cls.rep, ses.fr, ses.W);
    Json j = rational_json(r);
    j["orbit_size"] = cls.members.size();
    arr.push_back(std::move(j));
  }
  return arr;
}

Json cmd_torus(const Json& params) {
  RunConfig cfg = RunConfig::from_json(params);
  Session ses = Session::open(cfg);
  auto entry = [&](int w) {
    FixedTorus t = fixed_torus(w, ses.fr, ses.W);
    Json j;
    j["word"] = word_json(ses.W, w);
    j["diagonal"] = t.diagonal;
    j["invariant_factors"] = t.invariant_factors;
    j["order"] = t.order;
    return j;
  };
  if (params.contains("w")) {
    std::vector<int> word = parse_word(params.at("w"), ses.rd.num_simple());
    int w = ses.W.identity();
    for (int i : word) w = ses.W.mult_simple_right(w, i);
    return entry(w);
  }
  Json arr = Json::array();
  for (int w = 0; w < ses.W.order(); ++w) arr.push_back(entry(w));
  return arr;
}

Json cmd_curtis(const Json& params) {
  RunConfig cfg = RunConfig::from_json(params);
  Session ses = Session::open(cfg);
  CurtisTable table = curtis_spectral(ses.fr, ses.W);
  Json j;
  Json classes = Json::array();
  for (size_t c = 0; c < table.classes.size(); ++c) {
    Json cj;
    cj["representative"] = point_json(table.classes[c].rep);
    cj["witness_w"] = word_json(ses.W, table.injectivity_witness[c]);
    Json images = Json::array();
    for (int w = 0; w < ses.W.order(); ++w) {
      if (table.per_w_images[w][c].empty()) continue;
      Json im;
      im["w"] = word_json(ses.W, w);
      Json pts = Json::array();
      for (const SemisimplePoint& p : table.per_w_images[w][c]) pts.push_back(point_json(p));
      im["points"] = pts;
      images.push_back(im);
    }
    cj["images"] = images;
    classes.push_back(cj);
  }
  j["classes"] = classes;
  j["injective"] = table.injective;
  XOrbitReport xr = x_orbit_bijection(ses.fr, ses.W);
  j["x_orbit"] = Json{{"x_points", xr.x_point_count},
                      {"x_orbits", xr.x_orbit_count},
                      {"fixed_orbits", xr.fixed_orbit_count},
                      {"bijective", xr.bijective}};
  return j;
}

Json cmd_gg(const Json& params) {
  RunConfig cfg = RunConfig::from_json(params);
  Session ses = Session::open(cfg);
  std::vector<int> word = parse_word(params.value("w", Json::array()), ses.rd.num_simple());
  int w = ses.W.identity();
  for (int i : word) w = ses.W.mult_simple_right(w, i);
  GgShadow g = gg_restriction_shadow(w, ses.fr, ses.W);
  Json j;
  j["w"] = word_json(ses.W, w);
  j["rank"] = g.rank;
  j["shift_magnitude"] = g.shift;
  j["note"] = "shift reported as a magnitude; source statements carry both signs";
  return j;
}

Json cmd_soergel_bs(const Json& params) {
  RootDatum rd = resolve_datum(params.at("datum"));
  WeylGroup W = WeylGroup::enumerate(rd, params.value("weyl_cap", kDefaultWeylCap));
  SoergelContext ctx(rd, W);
  SemisimplePoint s = params.contains("point") ? parse_point(params.at("point"), rd.rank())
                                               : SemisimplePoint::zero(rd.rank());
  std::vector<int> word = parse_word(params.value("word", Json::array()), rd.num_simple());
  GradedBimodule m = bs_word(ctx, word, s);
  certify_right_freeness(m);
  Json j;
  j["word"] = [&] {
    Json arr = Json::array();
    for (int i : word) arr.push_back(i + 1);
    return arr;
  }();
  j["point"] = point_json(s);
  j["source"] = point_json(m.source);
  j["target"] = point_json(m.target);
  j["rank"] = m.rank();
  j["degrees"] = m.degrees;
  Json support = Json::array();
  for (int w : m.support) support.push_back(word_json(W, w));
  j["support"] = support;
  j["two_sided_free"] = true;
  std::set<i64> denoms;
  for (const auto& mat : m.right_action)
    for (const auto& row : mat)
      for (const Poly& p : row)
        for (i64 q : p.denominator_primes()) denoms.insert(q);
  j["denominator_primes"] = std::vector<i64>(denoms.begin(), denoms.end());
  return j;
}

Json cmd_soergel_steinberg(const Json& params) {
  std::string type = params.at("type").get<std::string>();
  std::string datum_name;
  if (type == "A1")
    datum_name = "SL2";
  else if (type == "A1A1")
    datum_name = "SL2xSL2";
  else if (type == "A2")
    datum_name = "SL3";
  else if (type == "B2")
    datum_name = "Sp4";
  else
    fail(Errc::InvalidArgument, "type must be one of A1, A1A1, A2, B2");
  RootDatum rd = RootDatum::builtin(datum_name);
  WeylGroup W = WeylGroup::enumerate(rd);
  SoergelContext ctx(rd, W);
  std::vector<int> simple = rd.simple_indices();
  SteinbergReport rep = steinberg_det(ctx, simple);
  InvariantRankReport inv = invariant_rank(ctx, simple);
  Json j;
  j["type"] = type;
  j["group_order"] = inv.rank;
  j["degrees"] = inv.degrees;
  j["hilbert_series_verified"] = inv.hilbert_series_verified;
  j["det_nonzero"] = !rep.determinant.is_zero();
  j["det_degree"] = rep.det_degree;
  j["det"] = rep.determinant.str();
  j["basis"] = rep.basis_used == SteinbergBasis::DescentProducts ? "descent_products"
                                                                 : "dual_descent_products";
  j["retried"] = rep.retried;
  j["denominator_primes"] = rep.denominator_primes;
  return j;
}

namespace {

Json soergel_summary(const RootDatum& rd, const WeylGroup& W, std::uint64_t seed) {
  SoergelContext ctx(rd, W);
  std::mt19937_64 rng(seed);
  Json j;
  int nv = rd.rank();
  bool nilpotent = true, leibniz = true;
  for (int i = 0; i < rd.num_simple(); ++i) {
    int root = rd.simple_indices()[i];
    for (int trial = 0; trial < 10; ++trial) {
      Poly f = random_poly(rng, nv, 4);
      Poly g = random_poly(rng, nv, 3);
      if (!ctx.demazure(root, ctx.demazure(root, f)).is_zero()) nilpotent = false;
      Poly lhs = ctx.demazure(root, f * g);
      Poly rhs = ctx.demazure(root, f) * g +
                 ctx.act(W.reflection(root), f) * ctx.demazure(root, g);
      if (!(lhs == rhs)) leibniz = false;
    }
  }
  j["demazure_squares_to_zero"] = nilpotent;
  j["twisted_leibniz"] = leibniz;
  // Rank formula on all length-2 words at the unipotent point.
  bool ranks_ok = true;
  SemisimplePoint zero = SemisimplePoint::zero(rd.rank());
  for (int a = 0; a < rd.num_simple(); ++a)
    for (int b = 0; b < rd.num_simple(); ++b) {
      GradedBimodule m = bs_word(ctx, {a, b}, zero);
      if (m.rank() != 4) ranks_ok = false;
    }
  j["bs_rank_formula_length2"] = ranks_ok;
  return j;
}

}  // namespace

Json cmd_report(const Json& params) {
  RunConfig cfg = RunConfig::from_json(params);
  Session ses = Session::open(cfg);
  Json j;
  j["config"] = cfg.to_json();
  j["datum"] = datum_summary_json(ses.rd);
  j["prime_tables"] = prime_tables_json(ses.rd, cfg.ell);
  {
    int w0 = ses.W.order() > 1 ? ses.W.longest_element() : 0;
    j["weyl"] = Json{{"order", ses.W.order()},
                     {"longest", Json{{"word", word_json(ses.W, w0)},
                                      {"length", ses.W.length(w0)}}}};
  }

  CurtisTable curtis = curtis_spectral(ses.fr, ses.W);
  std::vector<GeometricClass> classes = geometric_classes(ses.fr, ses.W, ses.mode);
  i64 total_rational = 0;
  Json class_arr = Json::array();
  for (const GeometricClass& cls : classes) {
    Json cj;
    cj["representative"] = point_json(cls.rep);
    cj["orbit_size"] = cls.members.size();
    StabilizerData st = stabilizer_data(cls.rep, ses.W);
    cj["gamma"] = gamma_json(st);
    EndoscopicDatum endo = endoscopic_group(cls.rep, ses.rd, ses.W);
    cj["phi_s_type"] = classification_json(endo.centralizer_datum.classify());
    cj["endoscopic_type"] = classification_json(endo.h_datum.classify());
    cj["pi0_order"] = endo.stab.gamma_order();
    RationalClassReport rat = rational_classes(cls.rep, ses.fr, ses.W);
    total_rational += rat.rational_count;
    cj["rational"] = rational_json(rat);
    Json forms = Json::array();
    for (const InnerFormLabel& f : inner_forms(cls.rep, ses.fr, ses.W))
      forms.push_back(f.label);
    cj["inner_forms"] = forms;
    // Curtis images for the Qbar class containing the representative. In
    // integral mode the representative is an ell'-part and matches a Qbar
    // class representative directly.
    for (size_t c = 0; c < curtis.classes.size(); ++c) {
      if (!(curtis.classes[c].rep == orbit_rep(cls.rep, ses.W))) continue;
      Json images = Json::array();
      for (int w = 0; w < ses.W.order(); ++w) {
        if (curtis.per_w_images[w][c].empty()) continue;
        Json im;
        im["w"] = word_json(ses.W, w);
        im["count"] = curtis.per_w_images[w][c].size();
        images.push_back(im);
      }
      cj["curtis_images"] = images;
      break;
    }
    class_arr.push_back(std::move(cj));
  }
  j["geometric_classes"] = class_arr;
  j["totals"] = Json{{"geometric", classes.size()}, {"rational", total_rational}};

  Json torus_arr = Json::array();
  for (int w = 0; w < ses.W.order(); ++w) {
    FixedTorus t = fixed_torus(w, ses.fr, ses.W);
    GgShadow g = gg_restriction_shadow(w, ses.fr, ses.W);
    Json tj;
    tj["word"] = word_json(ses.W, w);
    tj["diagonal"] = t.diagonal;
    tj["invariant_factors"] = t.invariant_factors;
    tj["order"] = t.order;
    tj["gg"] = Json{{"rank", g.rank}, {"shift_magnitude", g.shift}};
    torus_arr.push_back(std::move(tj));
  }
  j["torus_table"] = torus_arr;

  j["curtis"] = Json{{"injective", curtis.injective}};
  XOrbitReport xr = x_orbit_bijection(ses.fr, ses.W);
  j["x_orbit"] = Json{{"x_points", xr.x_point_count},
                      {"x_orbits", xr.x_orbit_count},
                      {"fixed_orbits", xr.fixed_orbit_count},
                      {"bijective", xr.bijective}};
  j["soergel"] = soergel_summary(ses.rd, ses.W, cfg.seed);

  // Optional cache copy keyed by the config hash.
  if (const char* dir = std::getenv("WEYLKIT_CACHE_DIR"); dir && *dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (!ec) {
      std::string key = std::to_string(fnv1a(render(cfg.to_json())));
      std::ofstream out(std::string(dir) + "/report-" + key + ".json");
      out << render(j);
    }
  }
  return j;
}

Json cmd_verify(const Json& params) {
  RunConfig cfg = RunConfig::from_json(params);
  Json checks = Json::array();
  auto record = [&](const std::string& name, bool ok, const std::string& detail) {
    checks.push_back(Json{{"check", name}, {"status", ok ? "pass" : "fail"}, {"detail", detail}});
    return ok;
  };
  try {
    Session ses = Session::open(cfg);
    ses.rd.validate();
    record("datum_validate", true, ses.rd.name());

    // Length subadditivity and Bruhat bounds on sampled pairs.
    {
      std::mt19937_64 rng(cfg.seed);
      bool ok = true;
      int w0 = ses.W.order() > 1 ? ses.W.longest_element() : 0;
      for (int t = 0; t < 200; ++t) {
        int u = int(rng() % ses.W.order());
        int v = int(rng() % ses.W.order());
        if (ses.W.length(ses.W.mult(u, v)) > ses.W.length(u) + ses.W.length(v)) ok = false;
        if (!ses.W.bruhat_leq(0, u) || !ses.W.bruhat_leq(u, w0)) ok = false;
      }
      if (!record("weyl_sanity", ok, "length subadditivity and Bruhat bounds")) {
        return Json{{"ok", false}, {"checks", checks}};
      }
    }

    // Stabilizer sweep: Gamma abelian, bound, centralizer datum valid.
    {
      std::vector<SemisimplePoint> pts =
          enumerate_points(ses.rd, cfg.order_bound, ses.mode, &ses.W, true);
      for (const SemisimplePoint& s : pts) {
        check_gamma_bound(s, ses.rd, ses.W);
        centralizer_datum(s, ses.rd, ses.W).validate();
      }
      record("stabilizer_sweep", true, std::to_string(pts.size()) + " orbit representatives");
    }

    // Block lemma suite over every orbit in the sweep.
    {
      std::vector<SemisimplePoint> reps =
          enumerate_points(ses.rd, cfg.order_bound, ses.mode, &ses.W, true);
      i64 orbits = 0;
      for (const SemisimplePoint& s : reps) {
        build_groupoid(orbit(s, ses.W), ses.W);
        ++orbits;
      }
      record("block_groupoid_suite", true, std::to_string(orbits) + " orbits");
    }

    // Torus counts over all w.
    {
      for (int w = 0; w < ses.W.order(); ++w) fixed_torus(w, ses.fr, ses.W);
      record("torus_counts", true, "all " + std::to_string(ses.W.order()) + " elements");
    }

    // Curtis injectivity and the orbit bijection.
    {
      curtis_spectral(ses.fr, ses.W);
      x_orbit_bijection(ses.fr, ses.W);
      record("curtis", true, "injectivity and X//W bijection");
    }

    // Soergel quick suite.
    {
      Json s = soergel_summary(ses.rd, ses.W, cfg.seed);
      bool ok = s["demazure_squares_to_zero"].get<bool>() && s["twisted_leibniz"].get<bool>() &&
                s["bs_rank_formula_length2"].get<bool>();
      record("soergel_quick", ok, "Demazure and Bott-Samelson spot checks");
      if (!ok) return Json{{"ok", false}, {"checks", checks}};
    }
    return Json{{"ok", true}, {"checks", checks}};
  } catch (const Error& e) {
    checks.push_back(Json{{"check", "exception"},
                          {"status", "fail"},
                          {"detail", e.what()},
                          {"reproducer", cfg.to_json()}});
    return Json{{"ok", false}, {"checks", checks}};
  }
}

Json run_command(const std::string& name, const Json& params) {
  if (name == "validate") return cmd_validate(params);
  if (name == "dual") return cmd_dual(params);
  if (name == "weyl") return cmd_weyl(params);
  if (name == "blocks") return cmd_blocks(params);
  if (name == "endoscopy") return cmd_endoscopy(params);
  if (name == "series") return cmd_series(params);
  if (name == "torus") return cmd_torus(params);
  if (name == "curtis") return cmd_curtis(params);
  if (name == "gg") return cmd_gg(params);
  if (name == "soergel-bs") return cmd_soergel_bs(params);
  if (name == "soergel-steinberg") return cmd_soergel_steinberg(params);
  if (name == "report") return cmd_report(params);
  if (name == "verify") return cmd_verify(params);
  fail(Errc::InvalidArgument, "unknown command '" + name + "'");
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace weylkit
