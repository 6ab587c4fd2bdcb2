// Command dispatch for the qpoly tool. Kept in a header so tests can drive it
// with string streams.
#pragma once

#include "qpoly/experiments.hpp"
#include "qpoly/io/json.hpp"
#include "qpoly/io/off.hpp"
#include "qpoly/lp.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace qpoly::cli {

using io::Json;

enum ExitCode { ok = 0, domain_error = 1, bad_input = 2 };

struct Options {
    std::string in, out, format = "json";
    std::uint64_t seed = 1;

    // subcommand parameters
    std::size_t dim = 3, count = 10, trials = 100, cap = 12;
    std::string mode = "exact", explode = "0", scatter;
    std::vector<std::string> algorithms{"dd", "placing"};
    std::vector<long> lambda;
    std::vector<int> sigma;
    std::size_t cube = 0;
    bool no_time = false;
};

class Session {
  public:
    Session(const Options& o, std::istream& in) : opt_(o), in_(in) {}

    Json input()
    {
        if (opt_.in.empty() || opt_.in == "-") {
            std::stringstream ss;
            ss << in_.rdbuf();
            return io::parse_json(ss.str());
        }
        std::ifstream f(opt_.in);
        if (!f)
            throw InvalidInput("cannot open " + opt_.in);
        std::stringstream ss;
        ss << f.rdbuf();
        return io::parse_json(ss.str());
    }

    Polyhedron polyhedron() { return io::polyhedron_from_json(input()); }

    bool off() const { return opt_.format == "off"; }
    const Options& opt() const { return opt_; }

  private:
    const Options& opt_;
    std::istream& in_;
};

namespace detail {

inline Json counts(const std::vector<Integer>& v) { return io::to_json(v); }

inline std::string dump(const Json& j) { return j.dump() + "\n"; }

inline PointConfiguration configuration(const Json& j) { return PointConfiguration(io::points_from_json(j)); }

inline Partition partition_of(Session& s, const Json* doc)
{
    if (!s.opt().lambda.empty())
        return Partition(s.opt().lambda);
    if (!doc || !doc->contains("lambda"))
        throw InvalidInput("a partition is required (--lambda or \"lambda\")");
    return Partition(io::longs_from_json(doc->at("lambda"), "lambda"));
}

inline std::optional<Permutation> permutation_of(Session& s, const Json* doc)
{
    if (!s.opt().sigma.empty())
        return Permutation(s.opt().sigma);
    if (!doc || !doc->contains("sigma"))
        return std::nullopt;
    std::vector<int> images;
    for (long v : io::longs_from_json(doc->at("sigma"), "sigma"))
        images.push_back(static_cast<int>(v));
    return Permutation(std::move(images));
}

// GT subcommands read flags when given, else a JSON document.
inline std::optional<Json> gt_document(Session& s)
{
    if (!s.opt().lambda.empty())
        return std::nullopt;
    return s.input();
}

inline Json to_json(const LPResult& r)
{
    Json j{{"status", to_string(r.status)}};
    if (r.status == LPStatus::optimal) {
        j["value"] = io::to_json(r.value);
        j["optimizer"] = io::to_json(r.optimizer);
    }
    return j;
}

inline Json orbits_json(const std::vector<Orbit>& orbits, std::size_t total)
{
    Json list = Json::array();
    for (const auto& o : orbits)
        list.push_back({{"representative", io::to_json(o.representative)}, {"size", o.size}});
    return {{"vectors", total}, {"orbits", list}};
}

}  // namespace detail

using Command = std::function<std::string(Session&)>;

inline std::map<std::string, std::pair<std::string, Command>> commands()
{
    using detail::dump;
    std::map<std::string, std::pair<std::string, Command>> c;

    c["hull"] = {"both descriptions of a polyhedron (or OFF of a 3-polytope)", [](Session& s) {
                     Polyhedron p = s.polyhedron();
                     if (s.off())
                         return io::write_off(io::polytope_mesh(p));
                     return dump(io::to_json(p));
                 }};
    c["facets"] = {"irredundant facets and affine-hull equations",
                   [](Session& s) { return dump(io::hrep_to_json(s.polyhedron().facets())); }};
    c["fvector"] = {"face numbers f_0 .. f_{d-1}", [](Session& s) {
                        return dump(Json{{"f", detail::counts(f_vector(s.polyhedron()))}});
                    }};
    c["hvector"] = {"h-vector of a simplicial polytope", [](Session& s) {
                        return dump(Json{{"h", detail::counts(h_vector(s.polyhedron()))}});
                    }};
    c["gvector"] = {"g-vector of a simplicial polytope", [](Session& s) {
                        return dump(Json{{"g", detail::counts(g_vector(s.polyhedron()))}});
                    }};
    c["volume"] = {"Euclidean and normalized volume", [](Session& s) {
                       Polyhedron p = s.polyhedron();
                       return dump(Json{{"dim", p.dim()},
                                        {"volume", io::to_json(volume(p))},
                                        {"normalized_volume", io::to_json(normalized_volume(p))}});
                   }};
    c["lattice-points"] = {"integer points of a polytope", [](Session& s) {
                               Json pts = Json::array();
                               for (const auto& z : lattice_points(s.polyhedron()))
                                   pts.push_back(io::to_json(to_rational(z)));
                               const std::size_t n = pts.size();
                               return dump(Json{{"count", n}, {"points", std::move(pts)}});
                           }};
    c["ehrhart"] = {"Ehrhart polynomial, coefficients by increasing degree", [](Session& s) {
                        UnivariatePolynomial e = ehrhart_polynomial(s.polyhedron());
                        return dump(Json{{"coefficients", io::to_json(e.coefficients())},
                                         {"polynomial", e.to_string()}});
                    }};
    c["lp"] = {"optimize {polyhedron, c, k, sense}", [](Session& s) {
                   Json doc = s.input();
                   if (!doc.is_object() || !doc.contains("polyhedron") || !doc.contains("c"))
                       throw InvalidInput("lp document needs \"polyhedron\" and \"c\"");
                   LinearProgram lp{io::polyhedron_from_json(doc["polyhedron"]), io::vector_from_json(doc["c"])};
                   if (doc.contains("k"))
                       lp.k = io::rational_from_json(doc["k"]);
                   if (doc.contains("sense")) {
                       const std::string sense = doc["sense"].is_string() ? doc["sense"].get<std::string>() : "";
                       if (sense == "max" || sense == "maximize")
                           lp.sense = Sense::maximize;
                       else if (sense == "min" || sense == "minimize")
                           lp.sense = Sense::minimize;
                       else
                           throw InvalidInput("sense must be \"max\" or \"min\"");
                   }
                   return dump(detail::to_json(solve(lp)));
               }};
    c["cone"] = {"extreme rays and facets of pos(generators)", [](Session& s) {
                     Json doc = s.input();
                     const Json& gens = doc.is_object() && doc.contains("rays") ? doc["rays"] : doc;
                     std::size_t width = 0;
                     if (doc.is_object() && doc.contains("dim"))
                         width = static_cast<std::size_t>(io::long_from_json(doc["dim"]));
                     auto rows = io::rows_from_json(gens, width, "rays");
                     if (width == 0)
                         throw InvalidInput("cannot infer the ambient dimension; add \"dim\"");
                     Cone cone = positive_hull(rows, width);
                     Json facets = Json::array(), eqs = Json::array();
                     for (const auto& f : cone.facets().inequalities)
                         facets.push_back(io::to_json(f.normal));
                     for (const auto& e : cone.facets().equations)
                         eqs.push_back(io::to_json(e.normal));
                     return dump(Json{{"dim", cone.dim()},
                                      {"pointed", cone.is_pointed()},
                                      {"rays", io::to_json(cone.rays())},
                                      {"lineality", io::to_json(cone.lineality())},
                                      {"facets", facets},
                                      {"equations", eqs}});
                 }};
    c["fan-check"] = {"validity and completeness of {rays, maximal_cones}", [](Session& s) {
                          Fan f = io::fan_from_json(s.input());
                          FanCheck chk = check_fan(f);
                          Json j{{"valid", chk.valid}};
                          if (!chk.valid) {
                              j["reason"] = chk.reason;
                              j["complete"] = nullptr;
                          } else {
                              try {
                                  j["complete"] = is_complete(f);
                              } catch (const DomainError&) {
                                  j["complete"] = nullptr;
                              }
                          }
                          return dump(j);
                      }};
    c["normal-fan"] = {"normal fan of a full-dimensional polytope", [](Session& s) {
                           Fan f = normal_fan(s.polyhedron());
                           if (s.off())
                               return io::write_off(io::fan_mesh(f));
                           return dump(io::to_json(f));
                       }};
    c["gt"] = {"Gelfand-Tsetlin polytope of --lambda (and --sigma)", [](Session& s) {
                   auto doc = detail::gt_document(s);
                   const Json* d = doc ? &*doc : nullptr;
                   Partition lambda = detail::partition_of(s, d);
                   auto sigma = detail::permutation_of(s, d);
                   Polyhedron p = sigma ? generalized_gelfand_tsetlin(lambda, *sigma) : gelfand_tsetlin(lambda);
                   Json j{{"lambda", lambda.parts()}};
                   if (sigma)
                       j["sigma"] = sigma->images();
                   j["dim"] = p.dim();
                   j["lattice_points"] = io::to_json(count_lattice_points(p));
                   if (!sigma)
                       j["weyl_dimension"] = io::to_json(weyl_dimension(lambda));
                   j["polyhedron"] = io::hrep_to_json(p.hrep());
                   return dump(j);
               }};
    c["gt-char"] = {"Demazure character of (--lambda, --sigma)", [](Session& s) {
                        auto doc = detail::gt_document(s);
                        const Json* d = doc ? &*doc : nullptr;
                        Partition lambda = detail::partition_of(s, d);
                        auto sigma = detail::permutation_of(s, d);
                        if (!sigma)
                            throw InvalidInput("gt-char needs a permutation (--sigma or \"sigma\")");
                        SparsePolynomial ch = demazure_character(lambda, *sigma);
                        Json terms = Json::array();
                        Integer total = 0;
                        for (auto it = ch.terms().rbegin(); it != ch.terms().rend(); ++it) {
                            terms.push_back({{"exponent", it->first}, {"coefficient", io::to_json(it->second)}});
                            total += it->second.get_num();
                        }
                        return dump(Json{{"lambda", lambda.parts()},
                                         {"sigma", sigma->images()},
                                         {"avoids_312", avoids_312(*sigma)},
                                         {"terms", terms},
                                         {"polynomial", ch.to_string()},
                                         {"value_at_ones", io::to_json(total)},
                                         {"determinant", io::to_json(demazure_dimension(lambda, *sigma))}});
                    }};
    c["rand-sphere"] = {"--count seeded points on the unit sphere in R^--dim", [](Session& s) {
                            const auto& o = s.opt();
                            SphereMode mode;
                            if (o.mode == "exact")
                                mode = SphereMode::exact;
                            else if (o.mode == "float")
                                mode = SphereMode::float_rationalized;
                            else
                                throw InvalidInput("mode must be exact or float");
                            auto pts = random_sphere_points(o.dim, o.count, mode, o.seed);
                            return dump(Json{{"points", io::to_json(pts)}});
                        }};
    c["triangulations"] = {"all triangulations of a point configuration", [](Session& s) {
                               PointConfiguration cfg = detail::configuration(s.input());
                               Json list = Json::array();
                               for (const auto& t : all_triangulations(cfg, s.opt().cap))
                                   list.push_back(io::to_json(t));
                               const std::size_t n = list.size();
                               return dump(Json{{"count", n}, {"triangulations", std::move(list)}});
                           }};
    c["regular"] = {"regularity test with height witness", [](Session& s) {
                        Json doc = s.input();
                        PointConfiguration cfg = detail::configuration(doc);
                        auto entry = [&](const Triangulation& t) {
                            auto w = is_regular(cfg, t);
                            Json j{{"triangulation", io::to_json(t)}, {"regular", w.has_value()}};
                            if (w)
                                j["weights"] = io::to_json(*w);
                            return j;
                        };
                        if (doc.is_object() && doc.contains("triangulation"))
                            return dump(entry(io::triangulation_from_json(doc["triangulation"])));
                        Json list = Json::array();
                        std::size_t regular = 0;
                        for (const auto& t : all_triangulations(cfg, s.opt().cap)) {
                            list.push_back(entry(t));
                            regular += list.back()["regular"].get<bool>() ? 1 : 0;
                        }
                        const std::size_t n = list.size();
                        return dump(Json{{"count", n}, {"regular", regular}, {"triangulations", std::move(list)}});
                    }};
    c["secondary"] = {"GKZ vectors and the secondary polytope", [](Session& s) {
                          PointConfiguration cfg = detail::configuration(s.input());
                          std::vector<Vector> gkz;
                          for (const auto& t : all_triangulations(cfg, s.opt().cap))
                              gkz.push_back(gkz_vector(cfg, t, false));
                          Polyhedron sec = convex_hull(gkz, cfg.size());
                          return dump(Json{{"triangulations", gkz.size()},
                                           {"gkz_vectors", io::to_json(gkz)},
                                           {"vertices", sec.vertices().size()},
                                           {"dim", sec.dim()},
                                           {"f", detail::counts(f_vector(sec))}});
                      }};
    c["gkz-orbits"] = {"orbits of GKZ vectors under --cube n or \"generators\"", [](Session& s) {
                           Json doc = s.input();
                           PointConfiguration cfg = detail::configuration(doc);
                           std::vector<Permutation> gens;
                           if (s.opt().cube > 0) {
                               gens = cube_symmetry_generators(s.opt().cube);
                           } else if (doc.is_object() && doc.contains("generators")) {
                               for (const auto& g : io::require_array(doc["generators"], "generators")) {
                                   std::vector<int> images;
                                   for (long v : io::longs_from_json(g, "generator"))
                                       images.push_back(static_cast<int>(v));
                                   gens.emplace_back(std::move(images));
                               }
                           } else {
                               throw InvalidInput("gkz-orbits needs --cube n or \"generators\"");
                           }
                           std::set<Vector> gkz;
                           for (const auto& t : all_triangulations(cfg, s.opt().cap))
                               gkz.insert(gkz_vector(cfg, t, false));
                           std::vector<Vector> vecs(gkz.begin(), gkz.end());
                           return dump(detail::orbits_json(orbit_decomposition(vecs, gens), vecs.size()));
                       }};
    c["export-off"] = {"OFF of a 3-polytope, a fan (d <= 3) or an exploded triangulation", [](Session& s) {
                           Json doc = s.input();
                           if (doc.is_object() && doc.contains("maximal_cones"))
                               return io::write_off(io::fan_mesh(io::fan_from_json(doc)));
                           if (doc.is_object() && doc.contains("triangulation")) {
                               PointConfiguration cfg = detail::configuration(doc);
                               Triangulation t = io::triangulation_from_json(doc["triangulation"]);
                               validate_triangulation(cfg, t);
                               return io::write_off(io::explode_mesh(cfg, t, parse_rational(s.opt().explode)));
                           }
                           return io::write_off(io::polytope_mesh(io::polyhedron_from_json(doc)));
                       }};
    c["bench"] = {"race the hull algorithms on one seeded instance", [](Session& s) {
                      const auto& o = s.opt();
                      std::vector<HullAlgorithm> algs;
                      for (const auto& a : o.algorithms)
                          algs.push_back(parse_hull_algorithm(a));
                      BenchReport r = bench(o.dim, o.count, o.seed, algs);
                      Json runs = Json::array();
                      for (const auto& run : r.runs) {
                          Json j{{"algorithm", to_string(run.algorithm)},
                                 {"facets", run.facets},
                                 {"peak_cells", run.peak_cells}};
                          if (!o.no_time)
                              j["seconds"] = run.seconds;
                          runs.push_back(std::move(j));
                      }
                      return dump(Json{{"d", r.d},
                                       {"n", r.n},
                                       {"seed", r.seed},
                                       {"instance_hash", r.instance_hash},
                                       {"vertices", r.vertices},
                                       {"runs", runs},
                                       {"facet_counts_agree", r.facet_counts_agree()}});
                  }};
    c["gexperiment"] = {"f/h/g-vectors of --trials random spherical polytopes", [](Session& s) {
                            const auto& o = s.opt();
                            GExperiment ex = gexperiment(o.dim, o.count, o.trials, o.seed);
                            Json trials = Json::array();
                            bool simplicial = true, ds = true;
                            for (const auto& t : ex.trials) {
                                trials.push_back({{"seed", t.seed},
                                                  {"vertices", t.vertices},
                                                  {"simplicial", t.simplicial},
                                                  {"f", detail::counts(t.f)},
                                                  {"h", detail::counts(t.h)},
                                                  {"g", detail::counts(t.g)}});
                                simplicial = simplicial && t.simplicial;
                                ds = ds && t.dehn_sommerville;
                            }
                            Json summary{{"ubt_ceiling", io::to_json(ex.ubt_ceiling)},
                                         {"g2_min", ex.g2_min ? io::to_json(*ex.g2_min) : Json(nullptr)},
                                         {"g2_max", ex.g2_max ? io::to_json(*ex.g2_max) : Json(nullptr)},
                                         {"all_simplicial", simplicial},
                                         {"all_dehn_sommerville", ds}};
                            if (!o.scatter.empty()) {
                                std::ofstream f(o.scatter);
                                if (!f)
                                    throw InvalidInput("cannot write " + o.scatter);
                                f << "# g2 g3\n";
                                for (const auto& [g2, g3] : ex.scatter())
                                    f << g2 << ' ' << g3 << '\n';
                            }
                            return dump(Json{{"d", ex.d},
                                             {"n", ex.n},
                                             {"seed", ex.seed},
                                             {"trials", trials},
                                             {"summary", summary}});
                        }};
    return c;
}

/// Parses argv-style arguments (without the program name), runs one subcommand, returns the exit code.
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err)
{
    Options opt;
    CLI::App app{"Exact polyhedral computations over the rationals", "qpoly"};
    app.require_subcommand(1, 1);
    app.add_option("--in", opt.in, "input JSON file (default: stdin)");
    app.add_option("--out", opt.out, "output file (default: stdout)");
    app.add_option("--seed", opt.seed, "seed for random instances");
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "off"}));

    auto cmds = commands();
    for (auto& [name, entry] : cmds) {
        CLI::App* sub = app.add_subcommand(name, entry.first);
        sub->fallthrough();
        if (name == "rand-sphere" || name == "bench" || name == "gexperiment") {
            sub->add_option("--dim", opt.dim, "ambient dimension");
            sub->add_option("--count", opt.count, "number of points");
        }
        if (name == "rand-sphere")
            sub->add_option("--mode", opt.mode, "exact or float");
        if (name == "gexperiment") {
            sub->add_option("--trials", opt.trials, "number of instances");
            sub->add_option("--scatter", opt.scatter, "write (g2, g3) pairs to this file");
        }
        if (name == "bench") {
            sub->add_option("--algorithms", opt.algorithms, "subset of {dd, placing}");
            sub->add_flag("--no-time", opt.no_time, "omit wall times (byte-stable output)");
        }
        if (name == "gt" || name == "gt-char") {
            sub->add_option("--lambda", opt.lambda, "partition");
            sub->add_option("--sigma", opt.sigma, "permutation in one-line notation");
        }
        if (name == "triangulations" || name == "regular" || name == "secondary" || name == "gkz-orbits")
            sub->add_option("--cap", opt.cap, "refuse configurations with more points");
        if (name == "gkz-orbits")
            sub->add_option("--cube", opt.cube, "use the symmetry group of the n-cube");
        if (name == "export-off")
            sub->add_option("--explode", opt.explode, "explode factor for triangulations");
    }

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : bad_input;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        static const std::set<std::string> off_capable{"hull", "normal-fan", "export-off"};
        if (opt.format == "off" && !off_capable.count(name))
            throw InvalidInput(name + " has no OFF output");
        Session session(opt, in);
        std::string result = cmds.at(name).second(session);
        if (opt.out.empty() || opt.out == "-") {
            out << result;
        } else {
            std::ofstream f(opt.out);
            if (!f)
                throw InvalidInput("cannot write " + opt.out);
            f << result;
        }
        return ok;
    } catch (const InvalidInput& e) {
        err << "qpoly " << name << ": " << e.what() << '\n';
        return bad_input;
    } catch (const Json::exception& e) {
        err << "qpoly " << name << ": malformed input: " << e.what() << '\n';
        return bad_input;
    } catch (const DomainError& e) {
        err << "qpoly " << name << ": " << e.what() << '\n';
        return domain_error;
    } catch (const std::exception& e) {
        err << "qpoly " << name << ": " << e.what() << '\n';
        return domain_error;
    }
}

}  // namespace qpoly::cli
