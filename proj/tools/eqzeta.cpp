#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eqzeta/error.hpp"
#include "eqzeta/io.hpp"

using namespace eqzeta;
using io::json;

namespace {

struct Options {
  std::string format = "text";
  int max_order = 5040;
  int m_max = 0;
  std::vector<std::string> files;
};

class Output {
 public:
  explicit Output(const Options& opt) : structured_(opt.format == "structured") {}
  [[nodiscard]] bool structured() const { return structured_; }

  void element(const ZGRingElement& z, bool with_element = true) {
    if (with_element) line(io::render(z), "element", io::to_json(z));
    line(io::render(forget_to_classical(z)), "classical", io::to_json(forget_to_classical(z)));
  }
  void line(const std::string& text, const std::string& key, json value) {
    if (structured_) {
      doc_[key] = std::move(value);
    } else {
      std::cout << text << '\n';
    }
  }
  void finish() {
    if (structured_) std::cout << doc_.dump(2) << '\n';
  }

 private:
  bool structured_;
  json doc_ = json::object();
};

std::string element_list(const FiniteGroup& g, const std::vector<Element>& elements) {
  std::string out = "{";
  for (std::size_t i = 0; i < elements.size(); ++i) out += (i ? ", " : "") + g.label(elements[i]);
  return out + "}";
}

void cmd_subgroups(const Options& opt) {
  const io::Document doc = io::read_document(opt.files[0]);
  const GroupRef group = io::group_of(doc, {opt.max_order}).ref;
  const FiniteGroup& g = group->group();
  const auto& classes = group->classes();
  Output out(opt);
  if (out.structured()) {
    json list = json::array();
    for (int c = 0; c < classes.size(); ++c) {
      list.push_back({{"id", c},
                      {"name", io::class_name(*group, c, false)},
                      {"order", classes[c].representative.order()},
                      {"conjugates", classes[c].members.size()},
                      {"normalizer", classes[c].normalizer.elements()},
                      {"elements", classes[c].representative.elements()},
                      {"generators", classes[c].generators}});
    }
    out.line("", "kind", "subgroups");
    out.line("", "group_order", g.order());
    out.line("", "total_subgroups", classes.total_subgroups());
    out.line("", "classes", list);
  } else {
    std::cout << "group order " << g.order() << ", " << classes.size() << " classes, "
              << classes.total_subgroups() << " subgroups\n";
    for (int c = 0; c < classes.size(); ++c) {
      std::cout << "class " << c << " (" << io::class_name(*group, c, false) << "): order "
                << classes[c].representative.order() << ", conjugates "
                << classes[c].members.size() << ", normalizer order "
                << classes[c].normalizer.order() << ", elements "
                << element_list(g, classes[c].representative.elements()) << '\n';
    }
  }
  out.finish();
}

void cmd_marks(const Options& opt) {
  const io::Document doc = io::read_document(opt.files[0]);
  const GroupRef group = io::group_of(doc, {opt.max_order}).ref;
  const TableOfMarks& marks = group->marks();
  Output out(opt);
  if (out.structured()) {
    json names = json::array();
    for (int c = 0; c < marks.size(); ++c) names.push_back(io::class_name(*group, c, false));
    out.line("", "kind", "marks");
    out.line("", "classes", names);
    out.line("", "marks", marks.rows());
  } else {
    for (int k = 0; k < marks.size(); ++k) {
      std::cout << "G/" << io::class_name(*group, k, false) << ":";
      for (int h = 0; h < marks.size(); ++h) std::cout << ' ' << marks(k, h);
      std::cout << '\n';
    }
  }
  out.finish();
}

void cmd_chi(const Options& opt) {
  const io::Document doc = io::read_document(opt.files[0]);
  const GroupRef group = io::group_of(doc, {opt.max_order}).ref;
  const io::ComplexData data = io::complex_from(doc, group);
  const BurnsideElement chi = chi_G_cellwise(data.complex);
  const long long euler = euler_characteristic(data.complex);
  Output out(opt);
  out.line(io::render(chi), "element", io::to_json(chi));
  out.line("chi = " + std::to_string(euler), "euler_characteristic", euler);
  out.finish();
}

LefschetzTable table_of(const io::Document& doc, const GroupRef& group, int m_max) {
  if (doc.kind == "complex") {
    const io::ComplexData data = io::complex_from(doc, group);
    if (!data.sigma) throw ValidationError("/sigma: complex has no cellular map");
    return lefschetz_table(data.complex, *data.sigma, m_max);
  }
  return lefschetz_table(io::gperm_from(doc, group), m_max);
}

void cmd_lefschetz(const Options& opt) {
  const io::Document doc = io::read_document(opt.files[0]);
  if (doc.kind != "gperm" && doc.kind != "complex") {
    throw ValidationError("/kind: lefschetz needs a gperm or complex document");
  }
  const io::LoadedGroup group = io::group_of(doc, {opt.max_order});
  const LefschetzTable table = table_of(doc, group.ref, opt.m_max);
  if (opt.format == "structured") {
    std::cout << io::to_json(table, group.spec).dump(2) << '\n';
  } else {
    std::cout << io::render(table) << '\n';
  }
}

// Single-document zeta commands; `kinds` restricts the accepted documents.
void cmd_unary(const Options& opt, const std::vector<std::string>& kinds, bool with_element) {
  const io::Document doc = io::read_document(opt.files[0]);
  if (!kinds.empty() && std::find(kinds.begin(), kinds.end(), doc.kind) == kinds.end()) {
    std::string list;
    for (const auto& k : kinds) list += (list.empty() ? "" : " or ") + k;
    throw ValidationError("/kind: expected a " + list + " document, got " + doc.kind);
  }
  const GroupRef group = io::group_of(doc, {opt.max_order}).ref;
  Output out(opt);
  out.element(io::zeta_of(doc, group), with_element);
  out.finish();
}

void cmd_binary(const Options& opt, const std::string& op) {
  const io::Document a = io::read_document(opt.files[0]);
  const io::Document b = io::read_document(opt.files[1]);
  const GroupRef ga = io::group_of(a, {opt.max_order}).ref;
  const GroupRef gb = io::group_of(b, {opt.max_order}).ref;
  if (!same_group(ga, gb)) throw GroupMismatch();
  const ZGRingElement za = io::zeta_of(a, ga);
  const ZGRingElement zb = io::zeta_of(b, ga);
  ZGRingElement result(ga);
  if (op == "st") {
    result = sebastiani_thom(za, zb);
  } else if (op == "mul") {
    result = za * zb;
  } else {
    result = za + zb;
  }
  Output out(opt);
  out.element(result);
  out.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant monodromy zeta functions over finite groups"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.add_option("--max-order", opt.max_order, "Largest accepted group order")
      ->check(CLI::Range(1, 10000))
      ->capture_default_str();

  struct Command {
    const char* name;
    const char* help;
    int files;
  };
  const std::vector<Command> commands{
      {"subgroups", "Conjugacy classes of subgroups", 1},
      {"marks", "Table of marks", 1},
      {"chi", "Equivariant Euler characteristic of a G-complex", 1},
      {"classify", "Class of a G-permutation (or cellular map) in the (ZxG) ring", 1},
      {"lefschetz", "Equivariant Lefschetz table", 1},
      {"zeta-solve", "Zeta function from a Lefschetz table", 1},
      {"st", "Sebastiani-Thom combination of two zeta functions", 2},
      {"acampo", "Zeta function from strata data", 1},
      {"forget", "Classical zeta function", 1},
      {"mul", "Product of two zeta functions", 2},
      {"add", "Sum of two zeta functions", 2},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("files", opt.files, c.files == 1 ? "Input document" : "Two input documents")
        ->required()
        ->expected(c.files);
    if (std::string(c.name) == "lefschetz") {
      sub->add_option("--m-max", opt.m_max, "Largest power (0: lcm of orbit periods)")
          ->check(CLI::Range(0, 1000000));
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (name == "subgroups") {
      cmd_subgroups(opt);
    } else if (name == "marks") {
      cmd_marks(opt);
    } else if (name == "chi") {
      cmd_chi(opt);
    } else if (name == "classify") {
      cmd_unary(opt, {"gperm", "complex"}, true);
    } else if (name == "lefschetz") {
      cmd_lefschetz(opt);
    } else if (name == "zeta-solve") {
      cmd_unary(opt, {"lefschetz"}, true);
    } else if (name == "acampo") {
      cmd_unary(opt, {"strata"}, true);
    } else if (name == "forget") {
      cmd_unary(opt, {}, false);
    } else {
      cmd_binary(opt, name);
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const InconsistentData& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const GroupMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
