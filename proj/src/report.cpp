#include "tamehecke/report.hpp"

#include <chrono>

namespace tamehecke {

namespace {

ReportJson matrix_json(const IntMatrix& m) {
  ReportJson rows = ReportJson::array();
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

ReportJson ratvec_json(const RatVec& v) {
  ReportJson out = ReportJson::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

ReportJson roots_json(const RootDatum& d, const std::vector<AffineRoot>& roots) {
  ReportJson out = ReportJson::array();
  for (const auto& a : roots) out.push_back(to_string(d, a));
  return out;
}

ReportJson coxeter_json(const std::vector<std::vector<int>>& m) {
  ReportJson out = ReportJson::array();
  for (const auto& row : m) {
    ReportJson r = ReportJson::array();
    for (int x : row) {
      if (x == 0)
        r.push_back("inf");
      else
        r.push_back(x);
    }
    out.push_back(r);
  }
  return out;
}

ReportJson cosets_json(const RootDatum& d, const std::vector<WCoset>& cosets) {
  ReportJson out = ReportJson::array();
  for (const auto& c : cosets) out.push_back({{"weyl", word_string(d, c.w)}, {"rep", c.rep}});
  return out;
}

ReportJson depth_json(const GenuineCharacter& chi) {
  const RootDatum& d = chi.datum();
  ReportJson c = ReportJson::object(), f = ReportJson::object();
  auto desc = j_chi_descriptor(chi);
  for (int i = 0; i < d.num_roots(); ++i) {
    c[d.label(i)] = c_alpha(chi, i);
    f[d.label(i)] = desc.f_values.at(i);
  }
  return {{"c_alpha", c}, {"f_chi", f}, {"torus_block", desc.torus_marker}};
}

// Failure text for the chi-report checks; empty when all hold.
std::vector<std::string> geometry_failures(const ChiGeometry& g) {
  const RootDatum& d = g.datum();
  std::vector<std::string> out;
  if (auto s = shift_failure(g); !s.empty()) out.push_back(s);
  if (simple_system_by_walls(d, g.system().affine) != g.delta_chi())
    out.push_back("Delta_chi differs between the N(s_a) criterion and the wall count");
  for (const auto& a : g.delta_chi())
    if (!g.fixes_chi(affine_reflection(d, a))) out.push_back("s_a does not fix chi for a = " + to_string(d, a));
  std::set<AffineRoot> delta(g.delta_chi().begin(), g.delta_chi().end());
  for (const auto& om : g.omega_generators()) {
    if (!g.fixes_chi(om)) out.push_back("Omega generator does not fix chi: " + to_string(om));
    std::set<AffineRoot> image;
    for (const auto& a : g.delta_chi()) image.insert(affine_action(d, om, a));
    if (image != delta) out.push_back("Omega generator does not permute Delta_chi: " + to_string(om));
  }
  return out;
}

ReportJson torsion_json(const RootDatum& d, const TorsionResult& t) {
  ReportJson out{{"found", t.found}, {"exact", t.exact}};
  if (t.found) out["witness"] = element_json(d, t.witness);
  return out;
}

}  // namespace

ReportJson element_json(const RootDatum& d, const ExtendedAffineElement& w) {
  return {{"weyl", word_string(d, w.linear)}, {"translation", w.translation}, {"linear", matrix_json(w.linear)}};
}

ReportJson datum_json(const RootDatum& d) {
  ReportJson roots = ReportJson::array();
  for (int i = 0; i < d.num_roots(); ++i)
    roots.push_back({{"label", d.label(i)}, {"root", d.root(i)}, {"coroot", d.coroot(i)}});
  ReportJson comps = ReportJson::array();
  for (const auto& c : d.components()) comps.push_back(c.name());
  return {{"rank", d.rank()}, {"components", comps}, {"roots", roots}, {"pairing", matrix_json(d.pairing())}};
}

std::string shift_failure(const ChiGeometry& g) {
  const RootDatum& d = g.datum();
  for (int a : g.system().diamond_roots) {
    // t_v(alpha + c + k n) = alpha + c - <alpha, v> + k n
    Rational p = d.pair_root(a, g.shift_v());
    const auto& c = g.system().affine.classes().at(a);
    if (p.denominator() != 1) return "<" + d.label(a) + ", v> is not an integer";
    if (mod(c.residue - p.numerator(), c.modulus) != 0)
      return "t_v does not carry the residue class of " + d.label(a) + " to 0 mod " + std::to_string(c.modulus);
  }
  return {};
}

ReportJson geometry_json(const ChiGeometry& g, int offset_bound) {
  const RootDatum& d = g.datum();
  ReportJson out;
  ReportJson diamond = ReportJson::array(), residues = ReportJson::object();
  for (int a : g.system().diamond_roots) {
    diamond.push_back(d.label(a));
    const auto& c = g.system().affine.classes().at(a);
    residues[d.label(a)] = {{"residue", c.residue}, {"modulus", c.modulus}};
  }
  ReportJson table = ReportJson::object();
  for (int a : d.positive_roots()) {
    ReportJson row = ReportJson::array();
    for (Int k = -offset_bound; k <= offset_bound; ++k) row.push_back(chi_affine(g.chi(), {a, k}));
    table[d.label(a)] = row;
  }
  out["diamond_roots"] = diamond;
  out["residues"] = residues;
  out["chi_affine"] = {{"offsets", {-offset_bound, offset_bound}}, {"exponents", table}};
  out["shift_v"] = ratvec_json(g.shift_v());
  out["mover_w0"] = element_json(d, g.mover_w0());
  out["delta_diamond"] = roots_json(d, g.delta_diamond());
  out["delta_chi"] = roots_json(d, g.delta_chi());
  out["coxeter_matrix"] = coxeter_json(g.coxeter_matrix());
  out["yqn_basis"] = matrix_json(g.cover().yqn_basis());
  out["wchi_cosets"] = cosets_json(d, g.wchi_cosets());
  out["wchi_ex_cosets"] = cosets_json(d, g.wchi_ex_cosets());
  out["wchi_ex_index"] = g.wchi_ex_index();
  ReportJson omegas = ReportJson::array();
  for (const auto& om : g.omega_generators()) omegas.push_back(element_json(d, om));
  out["omega_generators"] = omegas;
  return out;
}

Report run(const JobConfig& cfg) {
  using clock = std::chrono::steady_clock;
  Report rep;
  const CoverContext& ctx = *cfg.context;
  const RootDatum& d = ctx.cover.datum();
  rep.doc["datum"] = datum_json(d);
  rep.doc["cover"] = {{"n", ctx.cover.n()},
                      {"D", matrix_json(ctx.cover.D())},
                      {"B", matrix_json(ctx.cover.B_matrix())},
                      {"yqn_basis", matrix_json(ctx.cover.yqn_basis())},
                      {"yqn_index", ctx.cover.yqn().index()}};
  rep.doc["field"] = {{"p", ctx.field.p()}, {"f", ctx.field.f()}, {"q", ctx.field.q()}};
  rep.doc["seed"] = cfg.seed;
  rep.doc["warnings"] = cfg.warnings;
  ReportJson tasks = ReportJson::array();
  for (const auto& t : known_tasks())
    if (cfg.tasks.count(t)) tasks.push_back(t);
  rep.doc["tasks"] = tasks;

  ReportJson chars = ReportJson::array();
  for (std::size_t i = 0; i < cfg.characters.size(); ++i) {
    const auto& spec = cfg.characters[i];
    const std::string where = "characters[" + std::to_string(i) + "]";
    GenuineCharacter chi(cfg.context, spec.m, spec.depth);
    ReportJson cj;
    cj["m"] = chi.m();
    cj["depth"] = depth_json(chi);
    auto fail = [&](const std::string& task, const std::string& msg) {
      rep.pass = false;
      rep.failures.push_back(where + "." + task + ": " + msg);
    };
    if (!chi.is_depth_zero()) {
      cj["skipped"] = "positive depth: only the depth descriptor is computed";
      chars.push_back(cj);
      continue;
    }

    auto t0 = clock::now();
    auto stamp = [&](const std::string& label) {
      auto t1 = clock::now();
      rep.timings.emplace_back(where + "." + label, std::chrono::duration<double>(t1 - t0).count());
      t0 = t1;
    };
    ShimuraSetup setup = make_shimura_setup(chi);
    const ChiGeometry& g = *setup.cover_geometry;
    stamp("geometry");

    if (cfg.tasks.count("chi-report")) {
      ReportJson gj = geometry_json(g, cfg.bounds.offset);
      auto errs = geometry_failures(g);
      gj["verdict"] = errs.empty() ? "pass" : "fail";
      gj["failures"] = errs;
      for (const auto& e : errs) fail("chi-report", e);
      cj["chi_report"] = gj;
      stamp("chi-report");
    }

    if (cfg.tasks.count("hecke-check")) {
      HeckeAlgebra h(g);
      RelationOptions ro;
      ro.seed = cfg.seed;
      ro.word_length = cfg.bounds.word_length;
      ro.associativity_samples = cfg.bounds.samples;
      ro.one_sided_samples = cfg.bounds.samples;
      ReportJson hj = ReportJson::array();
      bool ok = true;
      for (const auto& rc : verify_relations(h, ro)) {
        ReportJson r{{"relation", rc.name}, {"checked", rc.checked}, {"verdict", rc.ok ? "pass" : "fail"}};
        if (!rc.ok) {
          r["witness"] = rc.witness;
          fail("hecke-check", rc.name + " fails at " + rc.witness);
          ok = false;
        }
        hj.push_back(r);
      }
      cj["hecke_check"] = {{"verdict", ok ? "pass" : "fail"}, {"relations", hj}};
      stamp("hecke-check");
    }

    if (cfg.tasks.count("shimura-check")) {
      const ChiGeometry& e = *setup.endo_geometry;
      const RootDatum& de = e.datum();
      UpsilonOptions uo;
      uo.seed = cfg.seed;
      uo.word_length = cfg.bounds.word_length;
      uo.product_samples = cfg.bounds.samples;
      UpsilonVerdict uv = upsilon_check(*setup.map, uo);
      FullnessReport fr = fullness_and_torsion(g, e);

      ReportJson sj;
      sj["endoscopic_datum"] = datum_json(de);
      sj["lattice_basis"] = matrix_json(setup.endo.lattice_basis);
      sj["chi_Qn"] = e.chi().m();
      sj["endoscopic_geometry"] = geometry_json(e, cfg.bounds.offset);
      ReportJson images = ReportJson::array();
      for (const auto& gi : uv.generator_images)
        images.push_back({{"kind", gi.kind}, {"source", element_json(de, gi.source)}, {"image", element_json(d, gi.image)}});
      sj["generator_images"] = images;
      sj["upsilon"] = {{"diamond_match", uv.diamond_match},
                       {"walls_match", uv.walls_match},
                       {"delta_match", uv.delta_match},
                       {"reflection_bijection", uv.reflection_bijection},
                       {"coxeter_match", uv.coxeter_match},
                       {"omega_match", uv.omega_match},
                       {"products_match", uv.products_match},
                       {"homomorphism", uv.homomorphism},
                       {"sampled_products", uv.sampled_products},
                       {"verdict", uv.ok() ? "pass" : "fail"},
                       {"failures", uv.failures}};
      for (const auto& f : uv.failures) fail("shimura-check", f);
      bool consistent = !(fr.index_endo == 1 && fr.index_cover != 1);
      if (!consistent) fail("shimura-check", fr.reason);
      sj["fullness"] = {{"index_cover", fr.index_cover},
                        {"index_endo", fr.index_endo},
                        {"torsion_cover", torsion_json(d, fr.torsion_cover)},
                        {"torsion_endo", torsion_json(de, fr.torsion_endo)},
                        {"full_algebras", to_string(fr.verdict)},
                        {"reason", fr.reason}};
      cj["shimura_check"] = sj;
      stamp("shimura-check");
    }

    if (cfg.tasks.count("apartment-svg")) {
      ApartmentBounds b;
      b.lo = -cfg.bounds.window;
      b.hi = cfg.bounds.window;
      if (d.rank() > 2) {
        cj["apartment"] = {{"skipped", "rank " + std::to_string(d.rank()) + " > 2"}};
      } else {
        ApartmentFigure fig = apartment_svg(g, b);
        std::string name = "apartment_" + std::to_string(i) + ".svg";
        rep.figures.emplace_back(name, fig.svg);
        cj["apartment"] = {{"file", name},
                           {"affine_walls", fig.stats.affine_walls},
                           {"chi_walls", fig.stats.chi_walls},
                           {"diamond_walls", fig.stats.diamond_walls},
                           {"chi_alcove_walls", fig.stats.chi_boundary},
                           {"diamond_alcove_walls", fig.stats.diamond_boundary}};
      }
      stamp("apartment-svg");
    }
    chars.push_back(cj);
  }
  rep.doc["characters"] = chars;
  rep.doc["verdict"] = rep.pass ? "pass" : "fail";
  rep.doc["failures"] = rep.failures;
  return rep;
}

}  // namespace tamehecke
