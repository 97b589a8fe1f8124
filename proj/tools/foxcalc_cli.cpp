#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "foxcalc/foxcalc.h"

namespace {

struct Options {
  std::string command;
  std::vector<std::string> inputs;
  std::string word;
  int wrt = 0;
  int rank = 0;
  std::optional<int> genus;
  int k = 1;
  std::string format = "text";
  unsigned jobs = 1;
  std::string braid;
  int strands = 0;
  std::string delta;
  std::string reduce = "none";
};

// Outcome of one unit of work; printed in input order.
struct Outcome {
  int exit = 0;
  std::string out;
  std::string err;
};

struct Failure {
  fc_status status;
  std::string message;
};

void check(fc_status s) {
  if (s != FC_OK) throw Failure{s, fc_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  fc_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{FC_ERR_IO, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// First non-comment keyword of a file decides how it is parsed.
std::string first_keyword(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    std::istringstream ls(line);
    std::string word;
    if (ls >> word) return word;
  }
  return "";
}

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(Handle&& o) noexcept : p(std::exchange(o.p, nullptr)) {}
  Handle& operator=(Handle&& o) noexcept {
    std::swap(p, o.p);
    return *this;
  }
  ~Handle() { Free(p); }
};

using Endo = Handle<fc_endo, fc_endo_free>;
using Cyl = Handle<fc_cylinder, fc_cylinder_free>;

std::vector<int> parse_braid(const std::string& text) {
  std::vector<int> out;
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v == 0) throw Failure{FC_ERR_PARSE, "bad braid letter '" + tok + "'"};
    out.push_back(v);
  }
  return out;
}

fc_reduction reduction_of(const std::string& s) {
  if (s == "none") return FC_REDUCE_NONE;
  if (s == "trivial") return FC_REDUCE_TRIVIAL;
  if (s == "abelian") return FC_REDUCE_ABELIAN;
  if (s == "burau") return FC_REDUCE_BURAU;
  throw Failure{FC_ERR_INVALID_ARGUMENT, "unknown reduction '" + s + "'"};
}

int require_genus(const Options& o) {
  if (!o.genus) throw Failure{FC_ERR_INVALID_ARGUMENT, "--genus is required for " + o.command};
  return *o.genus;
}

Endo load_endo(const std::string& path) {
  Endo e;
  check(fc_endo_parse(read_file(path).c_str(), &e.p));
  return e;
}

Cyl load_cylinder(const std::string& path, const Options& o) {
  const std::string text = read_file(path);
  Cyl c;
  if (first_keyword(text) == "genus") {
    check(fc_cylinder_parse(text.c_str(), &c.p));
  } else {
    Endo e;
    check(fc_endo_parse(text.c_str(), &e.p));
    check(fc_cylinder_from_mapping_class(e.p, require_genus(o), &c.p));
  }
  return c;
}

// Runs one command on one input (or on none, for commands without --in).
std::string run_one(const Options& o, const std::string* path, fc_format f) {
  char* out = nullptr;
  const std::string& c = o.command;
  if (c == "fox") {
    check(fc_report_fox(o.word.c_str(), o.rank, o.wrt, f, &out));
  } else if (c == "burau" || c == "gassner") {
    if (o.strands < 1) throw Failure{FC_ERR_INVALID_ARGUMENT, "--strands is required"};
    const auto b = parse_braid(o.braid);
    check(c == "burau" ? fc_report_burau(b.data(), b.size(), o.strands, f, &out)
                       : fc_report_gassner(b.data(), b.size(), o.strands, f, &out));
  } else if (c == "magnus") {
    Endo e;
    if (path) {
      e = load_endo(*path);
    } else {
      const auto b = parse_braid(o.braid);
      check(fc_endo_from_braid(b.data(), b.size(), o.strands, &e.p));
    }
    check(fc_report_magnus(e.p, reduction_of(o.reduce), f, &out));
  } else if (c == "symplectic" || c == "fibered") {
    Endo e = load_endo(*path);
    const int g = require_genus(o);
    check(c == "symplectic" ? fc_report_symplectic(e.p, g, f, &out) : fc_report_fibered(e.p, g, f, &out));
  } else if (c == "johnson") {
    Endo e = load_endo(*path);
    check(fc_report_johnson(e.p, o.k, f, &out));
  } else if (c == "cylinder" || c == "torsion") {
    Cyl cy = load_cylinder(*path, o);
    check(c == "cylinder" ? fc_report_cylinder(cy.p, f, &out) : fc_report_torsion(cy.p, f, &out));
  } else if (c == "factorize") {
    Cyl cy = load_cylinder(*path, o);
    check(fc_report_factorize(cy.p, o.delta.c_str(), f, &out));
  } else if (c == "alexander") {
    const std::string text = read_file(*path);
    if (first_keyword(text) == "rank") {
      check(fc_report_alexander_knot(text.c_str(), f, &out));
    } else {
      Endo e;
      check(fc_endo_parse(text.c_str(), &e.p));
      check(fc_report_mapping_torus(e.p, require_genus(o), f, &out));
    }
  } else if (c == "selftest") {
    std::uint64_t seed = 20240601;
    if (const char* env = std::getenv("FOXCALC_SEED")) {
      try {
        seed = std::stoull(env);
      } catch (const std::exception&) {
        throw Failure{FC_ERR_INVALID_ARGUMENT, "FOXCALC_SEED must be an unsigned integer"};
      }
    }
    int ok = 0;
    check(fc_report_selftest(seed, f, &ok, &out));
    if (!ok) throw Failure{FC_ERR_INTERNAL, "selftest failed\n" + take(out)};
  } else {
    throw Failure{FC_ERR_INVALID_ARGUMENT, "unknown command " + c};
  }
  return take(out);
}

Outcome guarded(const Options& o, const std::string* path, fc_format f) {
  Outcome r;
  try {
    r.out = run_one(o, path, f);
  } catch (const Failure& e) {
    const bool parse = e.status == FC_ERR_PARSE || e.status == FC_ERR_IO;
    r.exit = parse ? 2 : 1;
    r.err = std::string("error: ") + fc_status_name(e.status) + ": " + e.message;
    if (path) r.err = *path + ": " + r.err;
  }
  return r;
}

std::vector<Outcome> run_all(const Options& o, fc_format f) {
  std::vector<Outcome> results(o.inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < o.inputs.size();) results[i] = guarded(o, &o.inputs[i], f);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(o.jobs, static_cast<unsigned>(o.inputs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact Fox calculus, Magnus representations and torsion invariants"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(fc_version()));

  auto add_common = [&](CLI::App* s) {
    s->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    s->add_option("--jobs", o.jobs, "Worker threads for batch inputs")->check(CLI::PositiveNumber);
  };
  auto add_inputs = [&](CLI::App* s) {
    s->add_option("--in", o.inputs, "Input file (repeatable)")->required()->take_all();
  };

  auto* fox = app.add_subcommand("fox", "Fox derivative of a word");
  fox->add_option("--word", o.word, "Word such as \"x1 x2^-1\"")->required();
  fox->add_option("--wrt", o.wrt, "Generator index; omit for the full gradient")->check(CLI::PositiveNumber);
  fox->add_option("--rank", o.rank, "Free group rank (default: largest index used)")->check(CLI::PositiveNumber);

  auto* magnus = app.add_subcommand("magnus", "Magnus matrix of an endomorphism or braid");
  magnus->add_option("--in", o.inputs, "Endomorphism file (repeatable)")->take_all();
  magnus->add_option("--braid", o.braid, "Braid word as signed Artin generators");
  magnus->add_option("--strands", o.strands, "Number of strands")->check(CLI::PositiveNumber);
  magnus->add_option("--reduce", o.reduce, "Coefficient reduction")
      ->check(CLI::IsMember({"none", "trivial", "abelian", "burau"}));

  auto* burau = app.add_subcommand("burau", "Reduced-free Burau matrix of a braid");
  auto* gassner = app.add_subcommand("gassner", "Gassner matrix of a pure braid");
  for (auto* s : {burau, gassner}) {
    s->add_option("--braid", o.braid, "Braid word as signed Artin generators")->required();
    s->add_option("--strands", o.strands, "Number of strands")->required()->check(CLI::PositiveNumber);
  }

  auto* symplectic = app.add_subcommand("symplectic", "Twisted symplecticity and determinant cocycle");
  auto* fibered = app.add_subcommand("fibered", "Alexander polynomial of a fibered knot from its monodromy");
  for (auto* s : {symplectic, fibered}) {
    add_inputs(s);
    s->add_option("--genus", o.genus, "Surface genus")->required()->check(CLI::PositiveNumber);
  }

  auto* johnson = app.add_subcommand("johnson", "Johnson homomorphism tau_k");
  add_inputs(johnson);
  johnson->add_option("--k", o.k, "Index k of tau_k")->check(CLI::PositiveNumber);

  auto* cylinder = app.add_subcommand("cylinder", "Magnus matrix, torsion and checks of a homology cylinder");
  auto* torsion = app.add_subcommand("torsion", "Torsion of a homology cylinder");
  auto* compose = app.add_subcommand("compose", "Stack two homology cylinders");
  auto* factorize = app.add_subcommand("factorize", "Check the torsion factorization of a knot complement");
  for (auto* s : {cylinder, torsion, compose, factorize}) {
    add_inputs(s);
    s->add_option("--genus", o.genus, "Genus when an input is a mapping class")->check(CLI::PositiveNumber);
  }
  factorize->add_option("--delta", o.delta, "Alexander polynomial in t")->required();

  auto* alexander = app.add_subcommand("alexander", "Alexander polynomial of a knot group or mapping torus");
  add_inputs(alexander);
  alexander->add_option("--genus", o.genus, "Surface genus for a mapping class input")->check(CLI::PositiveNumber);

  app.add_subcommand("selftest", "Run the invariant suite (seed from FOXCALC_SEED)");

  for (auto* s : app.get_subcommands({})) add_common(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  o.command = app.get_subcommands().front()->get_name();
  const fc_format f = o.format == "json" ? FC_FORMAT_JSON : FC_FORMAT_TEXT;

  std::vector<Outcome> results;
  if (o.command == "compose") {
    if (o.inputs.size() != 2) {
      std::cerr << "error: invalid_argument: compose takes exactly two --in files\n";
      return 2;
    }
    Outcome r;
    try {
      Cyl m = load_cylinder(o.inputs[0], o), n = load_cylinder(o.inputs[1], o);
      char* out = nullptr;
      check(fc_report_compose(m.p, n.p, f, &out));
      r.out = take(out);
    } catch (const Failure& e) {
      r.exit = e.status == FC_ERR_PARSE || e.status == FC_ERR_IO ? 2 : 1;
      r.err = std::string("error: ") + fc_status_name(e.status) + ": " + e.message;
    }
    results.push_back(r);
  } else if (o.inputs.empty()) {
    if (o.command == "magnus" && o.braid.empty()) {
      std::cerr << "error: invalid_argument: magnus needs --in or --braid\n";
      return 2;
    }
    results.push_back(guarded(o, nullptr, f));
  } else {
    results = run_all(o, f);
  }

  int exit = 0;
  for (const auto& r : results) {
    std::cout << r.out;
    if (!r.err.empty()) std::cerr << r.err << '\n';
    exit = std::max(exit, r.exit);
  }
  return exit;
}
