#include "nec/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include <yaml-cpp/yaml.h>

namespace nec {

std::string InputError::located(std::string const& source) const {
  std::string where = source;
  if (line_ > 0) {
    where += ":" + std::to_string(line_) + ":" + std::to_string(column_);
  }
  return where + ": " + what();
}

namespace {

InputError at(YAML::Node const& node, std::string const& what,
              std::size_t offset = 0) {
  auto const mark = node.Mark();
  if (mark.is_null()) return InputError(what);
  return InputError(what, mark.line + 1,
                    mark.column + 1 + static_cast<int>(offset));
}

YAML::Node required(YAML::Node const& doc, char const* key) {
  auto node = doc[key];
  if (!node) {
    throw at(doc, std::string("missing field '") + key + "'");
  }
  return node;
}

std::string scalar(YAML::Node const& node, char const* what) {
  if (!node.IsScalar()) {
    throw at(node, std::string(what) + " must be a scalar");
  }
  return node.Scalar();
}

}  // namespace

CosetAction parse_action_document(std::string const& text) {
  YAML::Node doc;
  try {
    doc = YAML::Load(text);
  } catch (YAML::ParserException const& e) {
    throw InputError(e.msg, e.mark.line + 1, e.mark.column + 1);
  }
  if (!doc.IsMap()) throw InputError("document must be a mapping", 1, 1);

  auto const sig_node = required(doc, "signature");
  NecSignature sig;
  try {
    sig = parse_signature(scalar(sig_node, "signature"));
  } catch (SyntaxError const& e) {
    throw at(sig_node, std::string("signature: ") + e.what(), e.offset());
  }
  auto const violations = validate_signature(sig);
  if (!violations.empty()) {
    std::string msg = "invalid signature:";
    for (auto const& v : violations) msg += " " + v.field + ": " + v.message + ";";
    throw at(sig_node, msg);
  }

  auto const degree_node = required(doc, "degree");
  int degree = 0;
  try {
    degree = degree_node.as<int>();
  } catch (YAML::Exception const&) {
    throw at(degree_node, "degree must be an integer");
  }
  if (degree < 1) throw at(degree_node, "degree must be positive");

  auto const gens = required(doc, "generators");
  if (!gens.IsMap()) throw at(gens, "generators must be a mapping");
  std::map<std::string, Permutation> images;
  for (auto const& entry : gens) {
    auto const name = scalar(entry.first, "generator name");
    std::string cycles;
    if (entry.second.IsNull()) {
      cycles = "";
    } else {
      cycles = scalar(entry.second, "generator image");
    }
    if (images.contains(name)) {
      throw at(entry.first, "duplicate generator '" + name + "'");
    }
    try {
      images.emplace(name, parse_cycles(cycles, degree));
    } catch (CycleSyntaxError const& e) {
      throw at(entry.second, name + ": " + e.what(), e.offset());
    }
  }
  try {
    return CosetAction(sig, degree, images);
  } catch (ActionError const& e) {
    throw at(gens, e.what());
  }
}

CosetAction load_action_file(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_action_document(buffer.str());
}

std::string render_validation(ActionReport const& report,
                              CosetAction const& action) {
  std::ostringstream os;
  if (report.ok()) {
    os << "ok: " << report.relators_checked << " relators verified, transitive, degree "
       << action.degree() << "\n";
    return os.str();
  }
  os << "invalid: " << report.failures.size() << " of " << report.relators_checked
     << " relators fail, " << (report.transitive ? "transitive" : "intransitive")
     << ", degree " << action.degree() << "\n";
  for (auto const& f : report.failures) {
    os << "  relator " << f.text << " evaluates to " << format_cycles(f.image)
       << "\n";
  }
  if (!report.transitive) {
    os << "  orbits:";
    for (auto const& orbit : report.orbits) {
      os << " {";
      for (std::size_t i = 0; i < orbit.size(); ++i) os << (i ? "," : "") << orbit[i];
      os << "}";
    }
    os << "\n";
  }
  return os.str();
}

namespace {

std::string points(std::vector<Point> const& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    s += (i ? "," : "") + std::to_string(xs[i]);
  }
  return s + "}";
}

std::string ints(std::vector<int> const& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    s += (i ? "," : "") + std::to_string(xs[i]);
  }
  return s + ")";
}

std::string witness_text(Presentation const& pres, Witness const& w) {
  std::ostringstream os;
  os << pres.format_word(w.word()) << "  (" << w.base;
  for (auto const& s : w.steps) {
    os << " -" << pres.generators()[s.generator].name << (s.inverse ? "^-1" : "")
       << "-> " << s.to;
  }
  os << ")";
  return os.str();
}

}  // namespace

std::string render_text(SubgroupReport const& report, bool trace) {
  std::ostringstream os;
  if (!trace) {
    os << format_signature(report.signature) << "\n";
    return os.str();
  }
  auto const& pres = report.action.presentation();
  os << "input: " << format_signature(report.action.signature()) << " on "
     << report.action.degree() << " cosets\n";
  if (report.unverified_input) {
    os << "warning: unverified input (long relation fails)\n";
  }

  os << "step 1: induced reflections\n ";
  for (auto const& r : report.induced_reflections) os << " " << r.name();
  if (report.induced_reflections.empty()) os << " none";
  os << "\n";

  os << "steps 2-4: dihedral pairs\n";
  for (auto const& pair : report.dihedral_pairs) {
    auto const c = pres.generators()[pres.reflection(pair.cycle, pair.position - 1)].name;
    auto const d = pres.generators()[pres.reflection(pair.cycle, pair.position)].name;
    os << "  <" << c << "," << d << "> n=" << pair.n << "  " << c << " " << d
       << " = " << format_cycles_full(pair.product) << "\n";
    for (auto const& a : pair.orbits) {
      os << "    orbit " << points(a.orbit) << ": m=" << a.m << ", ";
      if (a.kind == OrbitKind::link) {
        os << "link " << a.end1.name() << " ~ " << a.end2.name();
      } else {
        os << "elliptic";
      }
      os << ", period " << pair.n << "/" << a.m << "=" << a.period << "\n";
    }
  }

  os << "step 5: closing links\n";
  bool any_closing = false;
  for (auto const& l : report.links) {
    if (!l.closing) continue;
    any_closing = true;
    os << "  " << l.end1.name() << " ~ " << l.end2.name() << " period 1\n";
  }
  if (!any_closing) os << "  none\n";

  os << "proper periods\n";
  for (auto const& c : report.elliptic_contributions) {
    os << "  " << c.period << " from " << c.origin << " on " << points(c.cosets)
       << "\n";
  }
  if (report.elliptic_contributions.empty()) os << "  none\n";

  os << "chains\n";
  for (auto const& chain : report.chains) {
    os << " ";
    for (std::size_t t = 0; t < chain.vertices.size(); ++t) {
      os << " " << chain.vertices[t].name() << " ~(" << chain.periods[t] << ")";
    }
    os << " " << chain.vertices.front().name() << "  => " << ints(chain.cycle)
       << "\n";
  }
  if (report.chains.empty()) os << "  none\n";

  auto const& o = report.orientability;
  os << "orientability: " << to_string(o.kind) << " (" << o.reflection_loops
     << " reflection loops)\n";
  if (o.witness) {
    os << "  negative circuit: " << witness_text(pres, *o.witness) << "\n";
  }

  auto const& a = report.area;
  os << "area: A(Gamma) = " << to_string(a.parent_area) << ", N = " << a.index
     << ", A(Lambda) = N * A(Gamma) = " << to_string(a.subgroup_area)
     << ", residual alpha*g = " << to_string(a.residual) << " (alpha = "
     << (report.signature.sign() == Sign::plus ? 2 : 1) << "), g = " << a.genus
     << "\n";
  for (auto const& f : report.flags) os << "flag: " << f << "\n";
  os << "signature: " << format_signature(report.signature) << "\n";
  return os.str();
}

std::string render_machine(SubgroupReport const& report) {
  using nlohmann::ordered_json;
  auto const& pres = report.action.presentation();
  ordered_json j;
  j["signature"] = format_signature(report.signature);
  j["input_signature"] = format_signature(report.action.signature());
  j["degree"] = report.action.degree();
  j["unverified_input"] = report.unverified_input;

  auto const& o = report.orientability;
  ordered_json orient{{"kind", to_string(o.kind)},
                      {"reflection_loops", o.reflection_loops}};
  if (o.witness) {
    ordered_json steps = ordered_json::array();
    for (auto const& s : o.witness->steps) {
      steps.push_back({{"from", s.from},
                       {"generator", pres.generators()[s.generator].name},
                       {"inverse", s.inverse},
                       {"to", s.to}});
    }
    orient["witness"] = {{"base", o.witness->base},
                         {"word", pres.format_word(o.witness->word())},
                         {"steps", steps}};
  }
  j["orientability"] = orient;

  auto const& a = report.area;
  j["area"] = {{"parent", to_string(a.parent_area)},
               {"index", a.index},
               {"subgroup", to_string(a.subgroup_area)},
               {"residual", to_string(a.residual)},
               {"genus", a.genus}};

  j["proper_periods"] = report.proper_periods;
  ordered_json contributions = ordered_json::array();
  for (auto const& c : report.elliptic_contributions) {
    contributions.push_back(
        {{"source", c.source == EllipticContribution::Source::elliptic_generator
                        ? "elliptic_generator"
                        : "dihedral_orbit"},
         {"origin", c.origin},
         {"cosets", c.cosets},
         {"period", c.period}});
  }
  j["elliptic_contributions"] = contributions;

  ordered_json induced = ordered_json::array();
  for (auto const& r : report.induced_reflections) induced.push_back(r.name());
  j["induced_reflections"] = induced;

  ordered_json pairs = ordered_json::array();
  for (auto const& pair : report.dihedral_pairs) {
    ordered_json orbs = ordered_json::array();
    for (auto const& an : pair.orbits) {
      ordered_json x{{"orbit", an.orbit},
                     {"m", an.m},
                     {"kind", an.kind == OrbitKind::link ? "link" : "elliptic"},
                     {"period", an.period}};
      if (an.kind == OrbitKind::link) {
        x["ends"] = {an.end1.name(), an.end2.name()};
      }
      orbs.push_back(x);
    }
    pairs.push_back(
        {{"pair", {pres.generators()[pres.reflection(pair.cycle, pair.position - 1)].name,
                   pres.generators()[pres.reflection(pair.cycle, pair.position)].name}},
         {"n", pair.n},
         {"product", format_cycles_full(pair.product)},
         {"orbits", orbs}});
  }
  j["dihedral_pairs"] = pairs;

  ordered_json links = ordered_json::array();
  for (auto const& l : report.links) {
    links.push_back({{"ends", {l.end1.name(), l.end2.name()}},
                     {"period", l.period},
                     {"closing", l.closing}});
  }
  j["links"] = links;

  ordered_json chains = ordered_json::array();
  for (auto const& c : report.chains) {
    ordered_json vs = ordered_json::array();
    for (auto const& v : c.vertices) vs.push_back(v.name());
    chains.push_back({{"vertices", vs}, {"periods", c.periods}, {"cycle", c.cycle}});
  }
  j["chains"] = chains;
  j["period_cycles"] = report.period_cycles;
  j["flags"] = report.flags;
  return j.dump(2) + "\n";
}

NecSignature signature_from_machine(std::string const& json) {
  auto const j = nlohmann::json::parse(json);
  return parse_signature(j.at("signature").get<std::string>());
}

}  // namespace nec
