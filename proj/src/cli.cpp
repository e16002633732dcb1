#include "balidx/cli.hpp"

#include "balidx/balance.hpp"
#include "balidx/errors.hpp"
#include "balidx/null_design.hpp"
#include "balidx/text_format.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <exception>
#include <fstream>
#include <sstream>

namespace balidx::cli {

namespace {

using nlohmann::ordered_json;

GroupSpec parse_group(const std::string &spec, std::size_t n)
{
  if (spec == "sym")
    return GroupSpec::symmetric();
  if (spec == "alt")
    return GroupSpec::alternating();
  if (spec.rfind("gens:", 0) == 0) {
    InputDocument doc = read_document(spec.substr(5));
    if (doc.kind() != DocumentKind::groupring)
      throw ParseError("generator file must be a groupring document");
    if (doc.n != n)
      throw DomainError("generators have degree " + std::to_string(doc.n) +
                        ", input has " + std::to_string(n) + " variables");
    std::vector<Permutation> gens;
    for (const auto &[p, c] : std::get<GroupRingElement>(doc.payload).terms())
      gens.push_back(p);
    return GroupSpec::generated(std::move(gens));
  }
  throw ParseError("group must be sym, alt, or gens:<file>");
}

GroupRingElement read_element(const std::string &path)
{
  InputDocument doc = read_document(path);
  if (doc.kind() != DocumentKind::groupring)
    throw ParseError(path + ": expected a groupring document");
  return std::get<GroupRingElement>(doc.payload);
}

std::string exponents_text(const Monomial &m)
{
  std::string s;
  for (std::size_t i = 0; i < m.nvars(); ++i)
    s += (i ? " " : "") + std::to_string(m[i]);
  return s;
}

std::string subset_text(const std::vector<unsigned> &subset)
{
  std::string s = "{";
  for (std::size_t i = 0; i < subset.size(); ++i)
    s += (i ? ", " : "") + std::to_string(subset[i]);
  return s + "}";
}

// Stable `key = value` lines, or one JSON object with --json.
class Report {
public:
  Report(std::ostream &out, bool json) : out_(out), json_(json) {}

  template <typename T>
  void add(const std::string &key, const T &value)
  {
    if (json_)
      object_[key] = value;
    else
      out_ << key << " = " << value << '\n';
  }

  void add(const std::string &key, const Integer &value)
  {
    if (json_)
      object_[key] = value.get_str();
    else
      out_ << key << " = " << value.get_str() << '\n';
  }

  void add(const std::string &key, bool value)
  {
    if (json_)
      object_[key] = value;
    else
      out_ << key << " = " << (value ? "true" : "false") << '\n';
  }

  // Documents print verbatim in text mode.
  void document(const std::string &key, const std::string &text)
  {
    if (json_)
      object_[key] = text;
    else
      out_ << text;
  }

  ordered_json &json() { return object_; }

  ~Report()
  {
    if (json_ && std::uncaught_exceptions() == 0)
      out_ << object_.dump() << '\n';
  }

private:
  std::ostream &out_;
  bool json_;
  ordered_json object_ = ordered_json::object();
};

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Balancing index and null design toolkit", "balidx"};
  app.require_subcommand(1);

  bool json = false;
  std::size_t cap = kDefaultDegreeCap;
  app.add_flag("--json", json, "Emit a single JSON object");
  app.add_option("--cap", cap, "Degree cap for group enumeration")->capture_default_str();

  std::string group = "sym";
  std::string input, element_path;

  auto *bal = app.add_subcommand("bal", "Balancing index over a group");
  bal->add_option("--group", group, "sym | alt | gens:<groupring file>")->capture_default_str();
  bal->add_option("input", input, "poly, graph, hypergraph or matrix document")->required();

  auto *ratio_cmd = app.add_subcommand("ratio", "bal(f, A_n) / bal(f)");
  ratio_cmd->add_option("input", input)->required();

  auto *witness = app.add_subcommand("witness", "Group ring element attaining the index");
  witness->add_option("--group", group)->capture_default_str();
  witness->add_option("input", input)->required();

  auto *verify = app.add_subcommand("verify", "Check a balancing certificate");
  verify->add_option("--group", group)->capture_default_str();
  verify->add_option("input", input)->required();
  verify->add_option("groupring", element_path)->required();

  auto *apply_cmd = app.add_subcommand("apply", "Apply a group ring element to a polynomial");
  apply_cmd->add_option("groupring", element_path)->required();
  apply_cmd->add_option("input", input)->required();

  unsigned t = 0;
  bool ordered = false;
  auto *verify_null = app.add_subcommand("verify-null", "Check a null (ordered) t-design");
  verify_null->add_option("--t", t)->required();
  verify_null->add_flag("--ordered", ordered);
  verify_null->add_option("groupring", element_path)->required();

  auto *construct = app.add_subcommand("construct", "Build a design element");
  construct->require_subcommand(1);
  unsigned k = 0, j = 0;
  std::size_t n = 0;
  std::string transposition, builtin_id;
  auto *c_alt = construct->add_subcommand("altsum", "Signed sum over S_k inside S_n");
  c_alt->add_option("k", k)->required();
  c_alt->add_option("n", n)->required();
  auto *c_pod = construct->add_subcommand("pod", "Product of j disjoint () - (2i-1 2i)");
  c_pod->add_option("j", j)->required();
  c_pod->add_option("n", n)->required();
  auto *c_double = construct->add_subcommand("double", "nu * (() - tau)");
  c_double->add_option("groupring", element_path)->required();
  c_double->add_option("transposition", transposition)->required();
  auto *c_builtin = construct->add_subcommand("builtin", "Stored element");
  c_builtin->add_option("id", builtin_id)->required();

  std::string out_path;
  std::size_t design_cap = kDefaultDesignCap;
  auto *min_even = app.add_subcommand("min-even-aug", "Least even augmentation of null designs");
  min_even->add_option("--n", n)->required();
  min_even->add_option("--t", t)->required();
  min_even->add_flag("--ordered", ordered);
  min_even->add_option("--out", out_path, "Witness file (default derived from n, t)");
  min_even->add_option("--design-cap", design_cap)->capture_default_str();

  std::uint64_t seed = kDefaultSuiteSeed;
  std::size_t trials = 50;
  auto *suite = app.add_subcommand("suite", "Randomized theorem checks");
  suite->add_option("--seed", seed)->capture_default_str();
  suite->add_option("--trials", trials)->capture_default_str();

  auto *convert = app.add_subcommand("convert", "Structured input to poly document");
  convert->add_option("input", input)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int status = app.exit(e, out, err);
    return status == 0 ? kOk : kUsage;
  }

  try {
    Report report(out, json);

    auto load_polynomial = [&]() { return to_polynomial(read_document(input)); };

    if (bal->parsed()) {
      Polynomial f = load_polynomial();
      BalanceReport r = balancing_index(f, parse_group(group, f.nvars()), cap);
      report.add("index", r.index);
      if (json) {
        report.add("group", r.group.name());
        report.add("group_order", r.group_order);
        report.add("classes", r.classes);
        report.add("constraints", r.constraints);
      }
      return kOk;
    }

    if (ratio_cmd->parsed()) {
      RatioReport r = ratio(load_polynomial(), cap);
      report.add("bal", r.bal);
      report.add("bal_alt", r.bal_alt);
      report.add("R", r.ratio);
      return kOk;
    }

    if (witness->parsed()) {
      Polynomial f = load_polynomial();
      BalanceReport r = balancing_index(f, parse_group(group, f.nvars()), cap);
      if (!r.witness)
        throw DomainError("balancing index is 0; no witness exists");
      if (json)
        report.add("index", r.index);
      report.document("witness", serialize(make_document(*r.witness)));
      return kOk;
    }

    if (verify->parsed()) {
      Polynomial f = load_polynomial();
      GroupRingElement alpha = read_element(element_path);
      WitnessCheck check = verify_witness(f, alpha, parse_group(group, f.nvars()), cap);
      report.add("valid", check.valid);
      report.add("augmentation", check.augmentation);
      if (!check.valid) {
        report.add("reason", check.reason);
        return kNegativeVerdict;
      }
      std::set<Monomial, GrlexLess> reps;
      for (const auto &[m, c] : check.image->terms())
        reps.insert(orbit_representative(m));
      ordered_json orbits = ordered_json::object();
      for (const Monomial &rep : reps) {
        const Integer c = check.image->coefficient(rep);
        if (json)
          orbits[exponents_text(rep)] = c.get_str();
        else
          out << "orbit " << exponents_text(rep) << " = " << c.get_str() << '\n';
      }
      if (json)
        report.json()["orbits"] = orbits;
      return kOk;
    }

    if (apply_cmd->parsed()) {
      GroupRingElement alpha = read_element(element_path);
      Polynomial image = apply(alpha, load_polynomial());
      report.document("polynomial", serialize(make_document(image)));
      return kOk;
    }

    if (verify_null->parsed()) {
      GroupRingElement nu = read_element(element_path);
      DesignCheckReport r = is_null(nu, t, ordered);
      report.add("null", r.verdict);
      report.add("t", t);
      report.add("ordered", ordered);
      report.add("augmentation", augmentation(nu));
      report.add("even_augmentation", augmentation(parity_split(nu).even));
      if (!r.verdict) {
        report.add("failing_subset", subset_text(r.first_failure->subset));
        report.add("monomial", exponents_text(r.first_failure->monomial));
        report.add("coefficient", r.first_failure->coefficient);
        return kNegativeVerdict;
      }
      return kOk;
    }

    if (construct->parsed()) {
      GroupRingElement nu;
      if (c_alt->parsed())
        nu = alt_sum(k, n);
      else if (c_pod->parsed())
        nu = pod(j, n);
      else if (c_double->parsed()) {
        GroupRingElement base = read_element(element_path);
        nu = double_design(base, parse_cycles(transposition, base.degree()));
      } else
        nu = builtin(builtin_id);
      report.document("element", serialize(make_document(nu)));
      return kOk;
    }

    if (min_even->parsed()) {
      EvenAugmentation r = min_even_augmentation(n, t, ordered, design_cap);
      if (out_path.empty())
        out_path = "min-even-aug-n" + std::to_string(n) + "-t" + std::to_string(t) +
                   (ordered ? "-ordered" : "") + ".groupring";
      std::ofstream file(out_path);
      if (!file)
        throw DomainError("cannot write witness file '" + out_path + "'");
      file << serialize(make_document(r.witness));
      report.add("g", r.g);
      report.add("witness", out_path);
      report.add("rows", r.rows);
      report.add("cols", r.cols);
      return kOk;
    }

    if (suite->parsed()) {
      SuiteReport r = theorem_suite(seed, trials);
      report.add("seed", r.seed);
      for (const auto &c : r.classes) {
        std::ostringstream line;
        line << "trials " << c.trials << " passed " << c.passed << " skipped " << c.skipped
             << " violations " << c.violations.size() << " R";
        for (const auto &[value, count] : c.ratio_counts)
          line << ' ' << value << ':' << count;
        if (json) {
          report.json()["classes"].push_back({{"name", c.name},
                                              {"claim", c.claim},
                                              {"trials", c.trials},
                                              {"passed", c.passed},
                                              {"skipped", c.skipped},
                                              {"ratio_counts", c.ratio_counts},
                                              {"violations", c.violations}});
        } else {
          report.add(c.name, line.str());
          for (const auto &v : c.violations)
            err << c.name << " violation: " << v;
        }
      }
      report.add("ok", r.ok());
      return r.ok() ? kOk : kNegativeVerdict;
    }

    if (convert->parsed()) {
      report.document("polynomial", serialize(make_document(load_polynomial())));
      return kOk;
    }
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return e.exit_code();
  }
  return kUsage;
}

} // namespace balidx::cli
