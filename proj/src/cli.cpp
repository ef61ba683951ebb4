#include "zonocube/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "zonocube/bruhat.hpp"
#include "zonocube/geom.hpp"
#include "zonocube/io.hpp"
#include "zonocube/order.hpp"
#include "zonocube/systems.hpp"

namespace zonocube::cli {

namespace {

using io::Json;

struct Options {
  int n = -1;
  int d = -1;
  int k = -1;
  int color = -1;
  std::string parent;
  std::string sets;
  std::string input;
  std::string output;
  std::string at;
  std::string t_params;
  std::string size = "640x480";
  std::string root;
  std::string type;
  std::string stack;
  bool count = false;
  bool dot = false;
  bool svg = false;
  bool certify = false;
  bool arrows = false;
  bool labels = false;
  std::size_t max_states = EnumerationLimits{}.max_states;
  std::uint64_t max_cubes = EnumerationLimits{}.max_cubes;
};

class Session {
 public:
  Session(const Options& o, std::istream& in, std::ostream& out) : opt_(o), in_(in), out_(out) {}

  std::string read_input() {
    if (opt_.input.empty() || opt_.input == "-") {
      std::ostringstream ss;
      ss << in_.rdbuf();
      return ss.str();
    }
    std::ifstream f(opt_.input);
    if (!f) throw MalformedInput("cannot read input file " + opt_.input);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }

  Json read_json() { return io::parse(read_input()); }
  Cubillage read_cubillage() { return io::cubillage_from_json(read_json()); }

  /// Sets from --sets, or else a SetSystem document (or bare JSON list) on the input.
  std::vector<ColorSet> read_sets() {
    if (!opt_.sets.empty()) return io::parse_set_list(opt_.sets);
    Json j = read_json();
    if (j.is_array()) return io::color_sets_from_json(j);
    return io::set_system_from_json(j).sets;
  }

  void write(const std::string& text) {
    if (opt_.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(opt_.output);
    if (!f) throw InvalidArgument("cannot write output file " + opt_.output);
    f << text;
  }

  void emit(const Json& j) { write(io::dump(j)); }

  void emit_cubillage(const Cubillage& Q) {
    if (opt_.svg) {
      write(render_svg(Q, svg_options(), realization()));
    } else {
      emit(io::to_json(Q));
    }
  }

  SvgOptions svg_options() const {
    SvgOptions s;
    auto x = opt_.size.find('x');
    try {
      if (x == std::string::npos) throw std::invalid_argument("size");
      std::size_t used = 0;
      s.width = std::stoi(opt_.size.substr(0, x), &used);
      if (used != x) throw std::invalid_argument("size");
      std::string h = opt_.size.substr(x + 1);
      s.height = std::stoi(h, &used);
      if (used != h.size()) throw std::invalid_argument("size");
    } catch (const std::logic_error&) {
      throw MalformedInput("--size must look like WIDTHxHEIGHT");
    }
    s.arrows = opt_.arrows;
    s.labels = opt_.labels;
    if (!opt_.stack.empty()) s.membrane_stack = opt_.stack == "none" ? std::vector<ColorSet>{} : io::parse_set_list(opt_.stack);
    return s;
  }

  Realization realization() const {
    if (opt_.t_params.empty()) return {};
    std::vector<long long> t;
    std::stringstream ss(opt_.t_params);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        t.push_back(std::stoll(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::logic_error&) {
        throw MalformedInput("--t-params must be a comma separated list of integers");
      }
    }
    return Realization(t);
  }

  EnumerationLimits limits() const { return {opt_.max_cubes, opt_.max_states}; }

  const Options& opt() const { return opt_; }

 private:
  const Options& opt_;
  std::istream& in_;
  std::ostream& out_;
};

Json facets_json(const std::vector<Facet>& plates) { return io::to_json(Membrane{plates})["plates"]; }

std::string direction_name(FlipDirection d) { return d == FlipDirection::raising ? "raising" : "lowering"; }

ColorSet universe(const Options& o) {
  if (o.n < 1 || o.n > ColorSet::kMaxColor) throw InvalidArgument("-n must lie in 1..63");
  return ColorSet::upto(o.n);
}

int cmd_standard(Session& s, bool anti) {
  ColorSet C = universe(s.opt());
  s.emit_cubillage(anti ? antistandard(C, s.opt().d) : standard(C, s.opt().d));
  return kOk;
}

int cmd_validate(Session& s) {
  Diagnostic diag = validate(s.read_cubillage());
  Json j{{"valid", diag.ok}};
  if (!diag.ok) {
    j["condition"] = diag.condition;
    j["detail"] = diag.detail;
  }
  s.emit(j);
  return diag.ok ? kOk : kDiagnostic;
}

int cmd_spectra(Session& s) {
  Cubillage Q = s.read_cubillage();
  require_valid(Q);
  s.emit(io::to_json(spectra(Q)));
  return kOk;
}

int cmd_reduce(Session& s) {
  Reduction r = reduce(s.read_cubillage(), s.opt().color);
  s.emit(Json{{"cubillage", io::to_json(r.cubillage)}, {"seam", facets_json(r.seam)}, {"below", io::to_json(r.below)}});
  return kOk;
}

int cmd_expand(Session& s) {
  Cubillage Q = s.read_cubillage();
  const Options& o = s.opt();
  if (o.at == "back") {
    s.emit_cubillage(expand_at_back(Q, o.color));
  } else if (o.at == "front") {
    s.emit_cubillage(expand_at_front(Q, o.color));
  } else if (o.at.empty()) {
    std::vector<ColorSet> stack = o.stack == "full" ? std::vector<ColorSet>{} : io::parse_set_list(o.stack);
    if (o.stack == "full") {
      for (const Cube& c : Q.cubes()) stack.push_back(c.type);
    }
    s.emit_cubillage(expand(Q, stack, o.color));
  } else {
    throw MalformedInput("--at must be back or front");
  }
  return kOk;
}

int cmd_contract(Session& s) {
  s.emit_cubillage(contract(s.read_cubillage(), s.opt().color));
  return kOk;
}

int cmd_flips(Session& s) {
  Cubillage Q = s.read_cubillage();
  require_valid(Q);
  Json arr = Json::array();
  for (const Flip& f : find_flips(Q)) {
    arr.push_back(Json{{"parent", io::to_json(f.parent)}, {"direction", direction_name(f.direction)},
                       {"base", io::to_json(f.base)}});
  }
  s.emit(arr);
  return kOk;
}

int cmd_flip(Session& s) {
  Cubillage Q = s.read_cubillage();
  require_valid(Q);
  s.emit_cubillage(apply_flip(Q, io::parse_set(s.opt().parent)));
  return kOk;
}

int cmd_standardize(Session& s) {
  Cubillage Q = s.read_cubillage();
  require_valid(Q);
  Json steps = Json::array();
  for (const Cubillage& step : standardize(Q)) steps.push_back(io::to_json(step));
  s.emit(Json{{"steps", steps}});
  return kOk;
}

int cmd_membranes(Session& s) {
  Cubillage Q = s.read_cubillage();
  require_valid(Q);
  auto stacks = enumerate_membranes(Q);
  if (s.opt().count) {
    s.write(std::to_string(stacks.size()) + "\n");
    return kOk;
  }
  Json arr = Json::array();
  for (const auto& st : stacks) {
    arr.push_back(Json{{"stack", io::to_json(st)}, {"membrane", io::to_json(membrane_of_stack(Q, st))}});
  }
  s.emit(arr);
  return kOk;
}

int cmd_garland(Session& s) {
  Cubillage Q = s.read_cubillage();
  require_valid(Q);
  Json arr = Json::array();
  for (const auto& [from, to] : garland(Q)) arr.push_back(Json{{"from", io::to_json(from)}, {"to", io::to_json(to)}});
  s.emit(Json{{"map", arr}});
  return kOk;
}

int cmd_inversions(Session& s) {
  Cubillage Q = s.read_cubillage();
  require_valid(Q);
  s.emit(io::to_json(SetSystem(Q.colors().max(), inversions(Q))));
  return kOk;
}

int cmd_order(Session& s) {
  Cubillage Q = s.read_cubillage();
  require_valid(Q);
  if (s.opt().dot) {
    s.write(natural_order_dot(Q));
  } else {
    s.emit(io::to_json(order_of(Q)));
  }
  return kOk;
}

int cmd_from_spectra(Session& s) {
  s.emit_cubillage(from_spectra(s.read_sets(), s.opt().n, s.opt().d));
  return kOk;
}

int cmd_from_consistent(Session& s) {
  MembraneRealization r = from_consistent(s.read_sets(), s.opt().n, s.opt().d);
  s.emit(Json{{"membrane", io::to_json(r.membrane)},
              {"cubillage", io::to_json(r.cubillage)},
              {"ambient", io::to_json(r.ambient)}});
  return kOk;
}

int cmd_from_order(Session& s) {
  s.emit_cubillage(from_order(io::order_from_json(s.read_json())));
  return kOk;
}

int cmd_enumerate(Session& s) {
  auto all = enumerate_cubillages(s.opt().n, s.opt().d, s.limits());
  if (s.opt().count) {
    s.write(std::to_string(all.size()) + "\n");
    return kOk;
  }
  Json arr = Json::array();
  for (const Cubillage& Q : all) arr.push_back(io::to_json(Q));
  s.emit(arr);
  return kOk;
}

int cmd_poset(Session& s) {
  BruhatPoset P = bruhat_poset(s.opt().n, s.opt().d, s.limits());
  if (s.opt().dot) {
    s.write(P.to_dot());
    return kOk;
  }
  Json covers = Json::array();
  for (auto [a, b] : P.covers) covers.push_back(Json::array({a, b}));
  s.emit(Json{{"n", P.n},
              {"d", P.d},
              {"size", P.elements.size()},
              {"minimum", P.minimum()},
              {"maximum", P.maximum()},
              {"max_rank", P.rank[P.maximum()]},
              {"graded", P.is_graded()},
              {"lattice", P.is_lattice()},
              {"ranks", P.rank},
              {"covers", covers}});
  return kOk;
}

int cmd_sec(Session& s) {
  Cubillage Q = s.read_cubillage();
  require_valid(Q);
  Triangulation T = sec(Q);
  Diagnostic diag = check_triangulation(T, s.realization());
  if (!diag) throw CorruptInput(diag.message());
  s.emit(io::to_json(T));
  return kOk;
}

int cmd_sec_surjectivity(Session& s) {
  SurjectivityReport r = sec_surjectivity(s.opt().n, s.opt().d, s.limits());
  Json j{{"n", r.n}, {"d", r.d}, {"cubillages", r.cubillages}, {"image", r.image}, {"all_valid", r.all_valid}};
  if (r.triangulations) {
    j["triangulations"] = *r.triangulations;
    j["hit"] = r.hit;
    Json missed = Json::array();
    for (const Triangulation& T : r.missed) missed.push_back(io::to_json(T.simplices));
    j["missed"] = missed;
    j["surjective"] = *r.surjective();
  } else {
    j["note"] = "no independent triangulation enumeration in this dimension; image size only";
  }
  s.emit(j);
  return kOk;
}

int cmd_check_separated(Session& s) {
  std::vector<ColorSet> sets = s.read_sets();
  const Options& o = s.opt();
  bool weak = o.k >= 0;
  if (!weak && o.d < 1) throw InvalidArgument("give -d (checks (d-1)-separation) or -k (weak k-separation)");
  Json bad = Json::array();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      bool ok = weak ? is_weakly_k_separated(sets[i], sets[j], o.k) : is_r_separated(sets[i], sets[j], o.d - 1);
      if (!ok) bad.push_back(Json::array({io::to_json(sets[i]), io::to_json(sets[j])}));
    }
  }
  Json j{{"separated", bad.empty()}, {"size", sets.size()}};
  if (weak) {
    j["k"] = o.k;
  } else {
    j["r"] = o.d - 1;
  }
  if (o.n >= 1 && !weak) j["maximum_size"] = binomial_upto(o.n, o.d);
  j["violations"] = bad;
  s.emit(j);
  return bad.empty() ? kOk : kDiagnostic;
}

int cmd_extend(Session& s) {
  const Options& o = s.opt();
  ExtensionResult r = extension_search(s.read_sets(), o.n, o.d, o.certify ? ExtensionMode::certify_maximal
                                                                       : ExtensionMode::complete);
  Json j{{"n", r.n}, {"d", r.d}, {"target", r.target}, {"base_size", r.base.size()},
         {"candidates", io::to_json(r.candidates)}, {"completable", r.completable}};
  if (o.certify) {
    Json ext = Json::array();
    for (const auto& e : r.maximal_extensions) ext.push_back(Json{{"size", e.size()}, {"sets", io::to_json(e)}});
    j["maximal_extensions"] = ext;
  } else if (r.completion) {
    j["completion"] = io::to_json(*r.completion);
  }
  s.emit(j);
  return kOk;
}

int cmd_weak_sep(Session& s) {
  const Options& o = s.opt();
  Json j;
  if (!o.sets.empty() || !o.input.empty()) {
    std::vector<ColorSet> sets = s.read_sets();
    bool ok = is_weakly_separated_system(sets, o.k);
    std::vector<ColorSet> more = weak_extension_candidates(sets, o.n, o.k);
    std::size_t total = peripheral_sets(o.n, o.k + 1).size();
    for (ColorSet X : sets) total += is_peripheral(X, o.n, o.k + 1) ? 0 : 1;
    j = Json{{"n", o.n}, {"k", o.k}, {"weakly_separated", ok}, {"size_with_periphery", total},
             {"extensions", io::to_json(more)}, {"maximal", ok && more.empty()}};
  } else {
    WeakSeparationReport r = weak_separation_suite(o.n, o.k);
    j = Json{{"n", r.n}, {"k", r.k}, {"maximum", r.maximum}, {"bound", r.bound},
             {"within_bound", r.within_bound()}, {"witness", io::to_json(r.witness)}};
  }
  s.emit(j);
  return kOk;
}

int cmd_render_svg(Session& s) {
  s.write(render_svg(s.read_cubillage(), s.svg_options(), s.realization()));
  return kOk;
}

int cmd_embed(Session& s) {
  const Options& o = s.opt();
  s.emit_cubillage(embed_subcubillage(universe(o), o.d, io::parse_set(o.root), io::parse_set(o.type)));
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Cubillages of cyclic zonotopes: construction, flips, orders and set systems", "zonocube"};
  app.require_subcommand(1, 1);

  std::map<CLI::App*, std::function<int(Session&)>> handlers;
  auto sub = [&](const char* name, const char* help, std::function<int(Session&)> fn) {
    CLI::App* c = app.add_subcommand(name, help);
    handlers[c] = std::move(fn);
    return c;
  };
  auto nd = [&](CLI::App* c) {
    c->add_option("-n", o.n, "number of colors")->required();
    c->add_option("-d", o.d, "dimension")->required();
  };
  auto input = [&](CLI::App* c) { c->add_option("input", o.input, "input file (default: stdin)"); };
  auto output = [&](CLI::App* c) { c->add_option("-o,--output", o.output, "output file (default: stdout)"); };
  auto svg = [&](CLI::App* c) {
    c->add_flag("--svg", o.svg, "emit the resulting 2-dimensional cubillage as SVG");
    c->add_option("--size", o.size, "SVG viewport WIDTHxHEIGHT");
    c->add_option("--t-params", o.t_params, "comma separated realization parameters t_1<...<t_n");
  };
  auto guard = [&](CLI::App* c) {
    c->add_option("--max-states", o.max_states, "refuse when more cubillages than this are reached");
    c->add_option("--max-cubes", o.max_cubes, "refuse when C(n,d) exceeds this");
  };

  for (bool anti : {false, true}) {
    CLI::App* c = sub(anti ? "antistandard" : "standard", anti ? "antistandard cubillage of Z(n,d)" : "standard cubillage of Z(n,d)",
                      [anti](Session& s) { return cmd_standard(s, anti); });
    nd(c);
    output(c);
    svg(c);
  }
  {
    CLI::App* c = sub("validate", "check the tiling conditions", cmd_validate);
    input(c);
    output(c);
  }
  {
    CLI::App* c = sub("spectra", "vertex spectra as a set system", cmd_spectra);
    input(c);
    output(c);
  }
  {
    CLI::App* c = sub("reduce", "delete the partition of a color", cmd_reduce);
    c->add_option("--color", o.color, "color to remove")->required();
    input(c);
    output(c);
  }
  {
    CLI::App* c = sub("expand", "insert a new color", cmd_expand);
    c->add_option("--color", o.color, "new color")->required();
    c->add_option("--stack", o.stack, "stack types (digit words or JSON), or 'full'")->default_str("");
    c->add_option("--at", o.at, "back or front: glue the new partition to a boundary (any color)");
    input(c);
    output(c);
    svg(c);
  }
  {
    CLI::App* c = sub("contract", "contract the partition of a color", cmd_contract);
    c->add_option("--color", o.color, "color to contract")->required();
    input(c);
    output(c);
    c->add_flag("--svg", o.svg, "emit SVG");
  }
  {
    CLI::App* c = sub("flips", "list flippable capsids", cmd_flips);
    input(c);
    output(c);
  }
  {
    CLI::App* c = sub("flip", "flip the capsid on a parent set", cmd_flip);
    c->add_option("--parent", o.parent, "the (d+1)-set, e.g. 123 or [1,2,3]")->required();
    input(c);
    output(c);
    svg(c);
  }
  {
    CLI::App* c = sub("standardize", "avalanche sequence down to the standard cubillage", cmd_standardize);
    input(c);
    output(c);
  }
  {
    CLI::App* c = sub("membranes", "all stacks and their membranes", cmd_membranes);
    c->add_flag("--count", o.count, "print only the number of membranes");
    input(c);
    output(c);
  }
  {
    CLI::App* c = sub("garland", "front-to-back garland bijection", cmd_garland);
    input(c);
    output(c);
  }
  {
    CLI::App* c = sub("inversions", "inversion set", cmd_inversions);
    input(c);
    output(c);
  }
  {
    CLI::App* c = sub("order", "natural order (cover relations)", cmd_order);
    c->add_flag("--dot", o.dot, "emit Graphviz DOT");
    input(c);
    output(c);
  }
  {
    CLI::App* c = sub("from-spectra", "rebuild a cubillage from its vertex spectra", cmd_from_spectra);
    nd(c);
    c->add_option("--sets", o.sets, "sets (digit words or JSON); otherwise read a set system");
    input(c);
    output(c);
    svg(c);
  }
  {
    CLI::App* c = sub("from-consistent", "membrane with a prescribed consistent inversion set", cmd_from_consistent);
    nd(c);
    c->add_option("--sets", o.sets, "sets (digit words or JSON); otherwise read a set system");
    input(c);
    output(c);
  }
  {
    CLI::App* c = sub("from-order", "rebuild a cubillage from an admissible order", cmd_from_order);
    input(c);
    output(c);
    svg(c);
  }
  {
    CLI::App* c = sub("enumerate", "all cubillages of Z(n,d) by raising flips", cmd_enumerate);
    nd(c);
    c->add_flag("--count", o.count, "print only the number of cubillages");
    guard(c);
    output(c);
  }
  {
    CLI::App* c = sub("poset", "higher Bruhat poset", cmd_poset);
    nd(c);
    c->add_flag("--dot", o.dot, "emit Graphviz DOT");
    guard(c);
    output(c);
  }
  {
    CLI::App* c = sub("sec", "section at height one as a triangulation", cmd_sec);
    c->add_option("--t-params", o.t_params, "realization parameters for the volume check");
    input(c);
    output(c);
  }
  {
    CLI::App* c = sub("sec-surjectivity", "compare the image of sec with all triangulations", cmd_sec_surjectivity);
    nd(c);
    guard(c);
    output(c);
  }
  {
    CLI::App* c = sub("check-separated", "pairwise (d-1)-separation or weak k-separation", cmd_check_separated);
    c->add_option("-n", o.n, "universe size (reports the maximal size)");
    c->add_option("-d", o.d, "dimension: checks (d-1)-separation");
    c->add_option("-k", o.k, "odd k: checks weak k-separation instead");
    c->add_option("--sets", o.sets, "sets (digit words or JSON); otherwise read a set system");
    input(c);
    output(c);
  }
  {
    CLI::App* c = sub("extend", "extend a separated system to maximal size", cmd_extend);
    nd(c);
    c->add_option("--sets", o.sets, "sets (digit words or JSON); otherwise read a set system");
    c->add_flag("--certify", o.certify, "list every inclusion-maximal extension");
    input(c);
    output(c);
  }
  {
    CLI::App* c = sub("weak-sep", "weak separation: exhaustive bound check or a witness system", cmd_weak_sep);
    c->add_option("-n", o.n, "universe size")->required();
    c->add_option("-k", o.k, "odd separation order")->required();
    c->add_option("--sets", o.sets, "witness system to test for maximality");
    input(c);
    output(c);
  }
  {
    CLI::App* c = sub("render-svg", "draw a 2-dimensional cubillage", cmd_render_svg);
    c->add_option("--size", o.size, "viewport WIDTHxHEIGHT");
    c->add_option("--t-params", o.t_params, "comma separated realization parameters");
    c->add_flag("--arrows", o.arrows, "overlay the natural order");
    c->add_flag("--labels", o.labels, "label vertices by spectra");
    c->add_option("--stack", o.stack, "highlight the membrane of this stack ('none' for the front boundary)");
    input(c);
    output(c);
  }
  {
    CLI::App* c = sub("embed", "a cubillage containing a prescribed cube", cmd_embed);
    nd(c);
    c->add_option("--root", o.root, "root of the cube")->required();
    c->add_option("--type", o.type, "type of the cube")->required();
    output(c);
    svg(c);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "zonocube: " << e.what() << "\n";
    return kMalformed;
  }

  CLI::App* chosen = app.get_subcommands().front();
  Session session(o, in, out);
  try {
    return handlers.at(chosen)(session);
  } catch (const MalformedInput& e) {
    err << "zonocube: malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const Refused& e) {
    err << "zonocube: refused: " << e.what() << "\n";
    return kDiagnostic;
  } catch (const std::exception& e) {
    err << "zonocube: " << e.what() << "\n";
    return kDiagnostic;
  }
}

}  // namespace zonocube::cli
