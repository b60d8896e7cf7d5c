#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "equichain/errors.hpp"
#include "equichain/examples.hpp"
#include "equichain/homology.hpp"
#include "equichain/io.hpp"
#include "equichain/pipeline.hpp"
#include "equichain/selftest.hpp"

using namespace equichain;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;

// An input problem for a command other than validate: exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("EQUICHAIN_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("EQUICHAIN_SEED is not an integer: ") + env);
    }
  }
  return 0x5eedULL;
}

ExampleInput load_input(const std::string& input) {
  if (input.rfind("builtin:", 0) == 0) {
    auto ex = builtin_example(input.substr(8));
    if (!ex) {
      std::string known;
      for (const auto& n : builtin_names()) known += " " + n;
      throw UsageError("unknown builtin '" + input.substr(8) + "'; known:" + known);
    }
    return *ex;
  }
  try {
    auto complex = build_complex(parse_complex_document(read_file(input)));
    return ExampleInput{complex, trivial_equivalence(complex), input};
  } catch (const InvalidInput& e) {
    throw UsageError(input + ": " + e.what());
  }
}

ExampleInput group_input(const std::string& group) {
  try {
    GroupPtr g = group.find(':') != std::string::npos && !std::ifstream(group)
                     ? resolve_group(group_ref(group))
                     : resolve_group(parse_group_document(read_file(group)));
    ExampleInput ex = gen_bar_resolution(g);
    ex.name = group;
    return ex;
  } catch (const InvalidInput& e) {
    throw UsageError(group + ": " + e.what());
  }
}

void print_table(const std::string& input, const std::vector<AbelianGroup>& groups, bool cohomology,
                 const std::string& format) {
  if (format == "tsv") {
    std::cout << "degree\trank\ttorsion\n";
    for (std::size_t k = 0; k < groups.size(); ++k) {
      std::string torsion;
      for (std::size_t i = 0; i < groups[k].torsion.size(); ++i)
        torsion += (i ? "," : "") + groups[k].torsion[i].get_str();
      std::cout << k << '\t' << groups[k].rank << '\t' << torsion << '\n';
    }
    return;
  }
  nlohmann::ordered_json out;
  out["input"] = input;
  out["kind"] = cohomology ? "cohomology" : "homology";
  out["groups"] = nlohmann::ordered_json::array();
  for (const auto& g : groups) out["groups"].push_back(nlohmann::ordered_json::parse(g.json()));
  std::cout << out.dump(2) << '\n';
}

int run_homology(const ExampleInput& ex, int max_degree, bool cohomology, const std::string& format,
                 std::uint64_t seed) {
  SampleOptions check;
  check.seed = seed;
  check.samples = 20;
  PipelineResult result = equivariant_strong_equivalence(ex.module, ex.equivalence, max_degree, check);
  ChainMatrices q = pipeline_quotient(result);
  print_table(ex.name, cohomology ? cohomology_groups(q, max_degree) : homology_groups(q, max_degree), cohomology,
              format);
  return kOk;
}

int run_validate(const std::string& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  try {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_object() && j.contains("degrees")) {
      auto complex = build_complex(parse_complex_document(text));
      std::cout << "valid complex '" << complex->name() << "' (degrees 0.." << complex->top_degree() << ")\n";
    } else {
      GroupPtr g = resolve_group(parse_group_document(text));
      std::cout << "valid group of order " << g->order() << '\n';
    }
    return kOk;
  } catch (const ValidationError& e) {
    std::cerr << "invalid: " << e.what() << '\n';
    return kInvalid;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant chain equivalences and (co)homology of free G-complexes"};
  app.require_subcommand(1);

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check a group table or complex document");
  validate->add_option("file", validate_path, "JSON document")->required();

  std::string input, format = "json";
  int max_degree = 0;
  bool cohomology = false;
  std::optional<std::uint64_t> seed;
  auto* eqh = app.add_subcommand("equivariant-homology", "Run the pipeline and print (co)homology of N/G");
  eqh->add_option("--input", input, "file or builtin:<name>")->required();
  eqh->add_option("--max-degree", max_degree)->required()->check(CLI::NonNegativeNumber);
  eqh->add_flag("--cohomology", cohomology);
  eqh->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));
  eqh->add_option("--seed", seed, "sampling seed for input validation");

  std::string group;
  auto* grp = app.add_subcommand("group-homology", "(Co)homology of a finite group via its bar resolution");
  grp->add_option("--group", group, "cyclic:<n>, symmetric:<n> or a group table file")->required();
  grp->add_option("--max-degree", max_degree)->required()->check(CLI::NonNegativeNumber);
  grp->add_flag("--cohomology", cohomology);
  grp->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));
  grp->add_option("--seed", seed, "sampling seed for input validation");

  int selftest_degree = 4;
  auto* self = app.add_subcommand("selftest", "Run the property suite");
  self->add_option("--seed", seed);
  self->add_option("--max-degree", selftest_degree)->check(CLI::Range(1, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return run_validate(validate_path);
    const std::uint64_t s = seed ? *seed : default_seed();
    if (*eqh) return run_homology(load_input(input), max_degree, cohomology, format, s);
    if (*grp) return run_homology(group_input(group), max_degree, cohomology, format, s);
    if (*self) {
      SelftestReport report = run_selftest(s, selftest_degree);
      std::cout << "seed " << s << ", max degree " << selftest_degree << '\n' << report.text();
      return report.ok() ? kOk : kInvalid;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionFailed& e) {
    std::cerr << "invalid: " << e.what() << '\n';
    return kInvalid;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
