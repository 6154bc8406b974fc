#include "latcvx/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include <latcvx/errors.hpp>
#include <latcvx/io.hpp>

#include "latcvx/render.hpp"

namespace latcvx::cli {

namespace {

using io::json;

int log_level() {
  const char* v = std::getenv("LATCVX_LOG");
  if (v == nullptr) return 0;
  const std::string s = v;
  if (s == "debug") return 2;
  if (s == "info") return 1;
  if (s == "quiet" || s.empty()) return 0;
  try {
    return std::stoi(s);
  } catch (const std::exception&) {
    return 0;
  }
}

class Logger {
 public:
  explicit Logger(std::ostream& err) : err_(err), level_(log_level()) {}
  void info(const std::string& msg) const {
    if (level_ >= 1) err_ << "latcvx: " << msg << '\n';
  }
  void debug(const std::string& msg) const {
    if (level_ >= 2) err_ << "latcvx: " << msg << '\n';
  }

 private:
  std::ostream& err_;
  int level_;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::vector<Rational> parse_params(const std::string& s) {
  std::vector<Rational> out;
  if (s.empty()) return out;
  for (const auto& part : split(s, ',')) out.push_back(Rational::parse(part));
  return out;
}

/// Where a polytope (and possibly its lattice) comes from.
struct Source {
  std::string path;
  std::string gallery;
  std::string params;
  std::string lattice_path;
};

struct Loaded {
  Polytope polytope;
  Lattice lattice;
  std::optional<GalleryEntry> entry;
};

void add_source(CLI::App* app, Source& src, bool with_lattice = true) {
  auto* p = app->add_option("-p,--polytope", src.path, "polytope JSON file");
  auto* g = app->add_option("--gallery", src.gallery, "gallery entry name");
  p->excludes(g);
  app->add_option("--param", src.params, "comma-separated rational parameters")
      ->allow_extra_args(false);
  if (with_lattice) app->add_option("-l,--lattice", src.lattice_path, "lattice JSON file");
}

Lattice lattice_for(const json& doc, std::size_t dim) {
  if (doc.is_object() && doc.contains("lattice")) return io::lattice_from_json(doc);
  return Lattice::standard(dim);
}

Loaded load(const Source& src) {
  if (src.path.empty() == src.gallery.empty())
    throw ParseError("exactly one of --polytope and --gallery is required");
  std::optional<Loaded> loaded;
  if (!src.gallery.empty()) {
    auto e = gallery(src.gallery, parse_params(src.params));
    loaded = Loaded{e.polytope, e.lattice, e};
  } else {
    if (!src.params.empty()) throw ParseError("--param needs --gallery");
    const json doc = io::read_file(src.path);
    auto p = io::polytope_from_json(doc);
    auto l = lattice_for(doc, p.dim());
    loaded = Loaded{std::move(p), std::move(l), std::nullopt};
  }
  if (!src.lattice_path.empty()) loaded->lattice = io::lattice_from_json(io::read_file(src.lattice_path));
  if (loaded->lattice.dim() != loaded->polytope.dim())
    throw PreconditionError("lattice dimension does not match polytope dimension");
  return std::move(*loaded);
}

/// A factor for `construct`: a file path or "gallery:NAME[:p1,p2,...]".
Loaded load_factor(const std::string& ref) {
  Source src;
  if (ref.rfind("gallery:", 0) == 0) {
    const auto parts = split(ref.substr(8), ':');
    if (parts.empty() || parts.size() > 2) throw ParseError("bad gallery reference: " + ref);
    src.gallery = parts[0];
    if (parts.size() == 2) src.params = parts[1];
  } else {
    src.path = ref;
  }
  return load(src);
}

struct Output {
  std::string path;
  std::optional<int> decimal;
  [[nodiscard]] io::OutputOptions options() const { return {decimal}; }
};

void add_output(CLI::App* app, Output& o, bool decimal = true) {
  app->add_option("-o,--output", o.path, "output file (default stdout)");
  if (decimal)
    app->add_option("--decimal", o.decimal, "add a rounded decimal field with k digits")
        ->check(CLI::Range(0, 100));
}

void emit_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open output file: " + path);
  f << text;
  if (!f) throw ParseError("cannot write output file: " + path);
}

void emit(const json& j, const std::string& path, std::ostream& out) {
  emit_text(j.dump(2) + "\n", path, out);
}

/// One grid axis "lo:hi:step".
std::vector<Rational> parse_axis(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 3) throw ParseError("grid axis must be lo:hi:step, got: " + s);
  const Rational lo = Rational::parse(parts[0]);
  const Rational hi = Rational::parse(parts[1]);
  const Rational step = Rational::parse(parts[2]);
  if (step <= Rational(0)) throw ParseError("grid step must be positive");
  if (hi < lo) throw ParseError("grid axis is empty: " + s);
  std::vector<Rational> values;
  for (Rational v = lo; v <= hi; v += step) values.push_back(v);
  return values;
}

std::vector<std::vector<Rational>> grid_points(const std::vector<std::string>& axes) {
  std::vector<std::vector<Rational>> points{{}};
  for (const auto& a : axes) {
    std::vector<std::vector<Rational>> next;
    for (const auto& prefix : points) {
      for (const auto& v : parse_axis(a)) {
        auto q = prefix;
        q.push_back(v);
        next.push_back(std::move(q));
      }
    }
    points = std::move(next);
  }
  return points;
}

/// Evaluates `f` on every index in [0, n) with `jobs` threads; results keep
/// index order.
template <typename T>
std::vector<T> parallel_map(std::size_t n, unsigned jobs, const std::function<T(std::size_t)>& f) {
  std::vector<T> results(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) results[i] = f(i);
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

json params_json(const std::vector<Rational>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(io::to_json(p));
  return a;
}

std::array<Rational, 4> parse_window(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 4) throw ParseError("window must be xmin,xmax,ymin,ymax");
  return {Rational::parse(parts[0]), Rational::parse(parts[1]), Rational::parse(parts[2]),
          Rational::parse(parts[3])};
}

/// Holds the parsed options of every subcommand; only the selected one is used.
struct Jobs {
  Source src;
  Output output;

  // check
  bool reduced = false;
  bool complete = false;
  std::vector<std::string> grid;
  unsigned jobs = 1;

  // construct
  std::string factor_a, factor_b;
  std::string height;

  // voronoi
  std::string gram_path;

  // gallery get
  std::string gallery_name;

  // render
  std::string certificate_path;
  std::string window;
  std::string directions;
};

int cmd_functional(const Jobs& j, bool is_width, std::ostream& out, const Logger& log) {
  const auto in = load(j.src);
  log.info(std::string("computing ") + (is_width ? "width" : "diameter"));
  const auto r = is_width ? width(in.polytope, in.lattice) : diameter(in.polytope, in.lattice);
  emit(io::to_json(r, j.output.options()), j.output.path, out);
  return kOk;
}

json check_one(const Polytope& p, const Lattice& l, bool want_reduced, bool want_complete,
               const io::OutputOptions& opt, bool& all) {
  json doc = json::object();
  all = true;
  if (want_reduced) {
    const auto c = is_reduced(p, l);
    doc["reduced"] = io::to_json(c, opt);
    all = all && c.verdict;
  }
  if (want_complete) {
    const auto c = is_complete(p, l);
    doc["complete"] = io::to_json(c, opt);
    all = all && c.verdict;
  }
  doc["verdict"] = all;
  return doc;
}

int cmd_check(const Jobs& j, std::ostream& out, const Logger& log) {
  const bool want_reduced = j.reduced || !j.complete;
  const bool want_complete = j.complete || !j.reduced;
  if (!j.grid.empty()) {
    if (j.src.gallery.empty()) throw ParseError("--grid needs --gallery");
    if (!j.src.params.empty()) throw ParseError("--grid replaces --param");
    if (!j.src.lattice_path.empty()) throw ParseError("--grid does not take --lattice");
    const auto points = grid_points(j.grid);
    log.info("sweeping " + std::to_string(points.size()) + " parameter points");
    const auto rows = parallel_map<json>(points.size(), j.jobs, [&](std::size_t i) {
      json row;
      row["params"] = params_json(points[i]);
      try {
        const auto e = gallery(j.src.gallery, points[i]);
        if (want_reduced) row["reduced"] = is_reduced(e.polytope, e.lattice).verdict;
        if (want_complete) row["complete"] = is_complete(e.polytope, e.lattice).verdict;
      } catch (const PreconditionError& ex) {
        row["error"] = ex.what();
      }
      return row;
    });
    json doc;
    doc["gallery"] = j.src.gallery;
    doc["points"] = rows;
    emit(doc, j.output.path, out);
    return kOk;
  }
  const auto in = load(j.src);
  log.info("certifying");
  bool all = true;
  const json doc =
      check_one(in.polytope, in.lattice, want_reduced, want_complete, j.output.options(), all);
  emit(doc, j.output.path, out);
  return all ? kOk : kFalseVerdict;
}

int cmd_reduce(const Jobs& j, std::ostream& out, const Logger& log) {
  const auto in = load(j.src);
  log.info("reducing");
  const Polytope r = reduce(in.polytope, in.lattice);
  json doc = io::document(r, in.lattice);
  doc["width"] = io::to_json(width(r, in.lattice), j.output.options());
  emit(doc, j.output.path, out);
  return kOk;
}

int cmd_construct(const Jobs& j, const std::string& kind, std::ostream& out, const Logger& log) {
  if (j.factor_a.empty()) throw ParseError("construct needs -a");
  const auto a = load_factor(j.factor_a);
  log.info("constructing " + kind);
  std::optional<Construction> c;
  if (kind == "lift") {
    if (!j.factor_b.empty()) throw ParseError("lift takes a single factor");
    c = lift(a.polytope, a.lattice);
  } else {
    if (j.factor_b.empty()) throw ParseError(kind + " needs -b");
    const auto b = load_factor(j.factor_b);
    if (kind == "product") {
      c = product(a.polytope, a.lattice, b.polytope, b.lattice);
    } else if (kind == "free-sum") {
      c = free_sum(a.polytope, a.lattice, b.polytope, b.lattice);
    } else {
      if (j.height.empty()) throw ParseError("join needs --height");
      c = join(a.polytope, a.lattice, b.polytope, b.lattice, Rational::parse(j.height));
    }
  }
  emit(io::document(c->polytope, c->lattice), j.output.path, out);
  return kOk;
}

int cmd_classify(const Jobs& j, std::ostream& out) {
  const auto in = load(j.src);
  emit(io::to_json(classify_triangle(in.polytope, in.lattice)), j.output.path, out);
  return kOk;
}

int cmd_voronoi(const Jobs& j, std::ostream& out, const Logger& log) {
  if (j.gram_path.empty() == j.src.lattice_path.empty())
    throw ParseError("exactly one of --gram and --lattice is required");
  const Lattice l = j.gram_path.empty() ? io::lattice_from_json(io::read_file(j.src.lattice_path))
                                        : io::lattice_from_gram_json(io::read_file(j.gram_path));
  log.info("computing Voronoi cell");
  json doc = io::document(voronoi_cell(l), l);
  json rel = json::array();
  for (const auto& v : voronoi_relevant(l)) rel.push_back(io::to_json(v));
  doc["relevant_vectors"] = rel;
  emit(doc, j.output.path, out);
  return kOk;
}

int cmd_gallery_list(const Jobs& j, std::ostream& out) {
  json a = json::array();
  for (const auto& g : gallery_catalog())
    a.push_back({{"name", g.name}, {"params", g.params}, {"description", g.description}});
  emit(a, j.output.path, out);
  return kOk;
}

int cmd_gallery_get(const Jobs& j, std::ostream& out) {
  emit(io::to_json(gallery(j.gallery_name, parse_params(j.src.params))), j.output.path, out);
  return kOk;
}

int cmd_render(const Jobs& j, std::ostream& out) {
  const auto in = load(j.src);
  if (in.polytope.dim() != 2) throw PreconditionError("wrong dimension");
  RenderOptions opt;
  if (!j.window.empty()) opt.window = parse_window(j.window);
  if (!j.certificate_path.empty())
    opt.overlay = overlay_from_certificate(io::read_file(j.certificate_path));
  if (!j.directions.empty()) {
    if (j.directions != "width" && j.directions != "diameter")
      throw ParseError("--directions must be width or diameter");
    const auto r = j.directions == "width" ? width(in.polytope, in.lattice)
                                           : diameter(in.polytope, in.lattice);
    const RatVector c = in.polytope.vertex_centroid();
    for (const auto& d : r.directions) {
      // width directions are functionals; draw them through the Euclidean identification
      opt.overlay.arrows.emplace_back(c, d);
    }
  }
  emit_text(render_svg(in.polytope, in.lattice, opt), j.output.path, out);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice width, lattice diameter, reducedness and completeness of rational polytopes"};
  app.name("latcvx");
  app.require_subcommand(1);
  Jobs j;

  auto* w = app.add_subcommand("width", "lattice width of a polytope");
  add_source(w, j.src);
  add_output(w, j.output);

  auto* d = app.add_subcommand("diameter", "lattice diameter of a polytope");
  add_source(d, j.src);
  add_output(d, j.output);

  auto* ch = app.add_subcommand("check", "certify reducedness and/or completeness");
  add_source(ch, j.src);
  add_output(ch, j.output);
  ch->add_flag("--reduced", j.reduced, "certify reducedness");
  ch->add_flag("--complete", j.complete, "certify completeness");
  ch->add_option("--grid", j.grid, "parameter axis lo:hi:step (repeat per parameter)")
      ->allow_extra_args(false);
  ch->add_option("--jobs", j.jobs, "worker threads for --grid")->check(CLI::Range(1u, 1024u));

  auto* re = app.add_subcommand("reduce", "shrink to a reduced polytope of the same width");
  add_source(re, j.src);
  add_output(re, j.output);

  auto* co = app.add_subcommand("construct", "product, free sum, join or lift");
  co->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> kinds;
  for (const std::string kind : {"product", "free-sum", "join", "lift"}) {
    auto* k = co->add_subcommand(kind, kind + " construction");
    k->add_option("-a", j.factor_a, "first factor: file or gallery:NAME[:params]")->required();
    if (kind != "lift") k->add_option("-b", j.factor_b, "second factor")->required();
    if (kind == "join") k->add_option("--height", j.height, "height of the join")->required();
    add_output(k, j.output, false);
    kinds.emplace_back(kind, k);
  }

  auto* cl = app.add_subcommand("classify-triangle", "normal form of a lattice triangle");
  add_source(cl, j.src);
  add_output(cl, j.output, false);

  auto* vo = app.add_subcommand("voronoi", "Voronoi cell of a lattice");
  vo->add_option("--gram", j.gram_path, "Gram matrix JSON file");
  vo->add_option("-l,--lattice", j.src.lattice_path, "lattice JSON file");
  add_output(vo, j.output, false);

  auto* ga = app.add_subcommand("gallery", "named example bodies");
  ga->require_subcommand(1);
  auto* gl = ga->add_subcommand("list", "list entries and parameter schemas");
  add_output(gl, j.output, false);
  auto* gg = ga->add_subcommand("get", "export one entry");
  gg->add_option("name", j.gallery_name, "entry name")->required();
  gg->add_option("--param", j.src.params, "comma-separated rational parameters")
      ->allow_extra_args(false);
  add_output(gg, j.output, false);

  auto* rd = app.add_subcommand("render", "SVG picture of a planar instance");
  add_source(rd, j.src);
  add_output(rd, j.output, false);
  rd->add_option("--certificate", j.certificate_path, "certificate JSON to overlay");
  rd->add_option("--window", j.window, "xmin,xmax,ymin,ymax");
  rd->add_option("--directions", j.directions, "draw width or diameter directions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "latcvx: " << e.what() << '\n';
    return kParseError;
  }

  const Logger log(err);
  try {
    if (w->parsed()) return cmd_functional(j, true, out, log);
    if (d->parsed()) return cmd_functional(j, false, out, log);
    if (ch->parsed()) return cmd_check(j, out, log);
    if (re->parsed()) return cmd_reduce(j, out, log);
    if (co->parsed()) {
      for (const auto& [kind, k] : kinds)
        if (k->parsed()) return cmd_construct(j, kind, out, log);
    }
    if (cl->parsed()) return cmd_classify(j, out);
    if (vo->parsed()) return cmd_voronoi(j, out, log);
    if (gl->parsed()) return cmd_gallery_list(j, out);
    if (gg->parsed()) return cmd_gallery_get(j, out);
    if (rd->parsed()) return cmd_render(j, out);
    err << "latcvx: no command\n";
    return kParseError;
  } catch (const ParseError& e) {
    err << "latcvx: " << e.what() << '\n';
    return kParseError;
  } catch (const PreconditionError& e) {
    err << "latcvx: " << e.what() << '\n';
    return kPreconditionError;
  } catch (const std::exception& e) {
    err << "latcvx: internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace latcvx::cli
