// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sppos/cli.h"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "sppos/decorated_permutation.h"
#include "sppos/enumeration.h"
#include "sppos/errors.h"
#include "sppos/json_io.h"
#include "sppos/le_diagram.h"
#include "sppos/necklace.h"
#include "sppos/oracle.h"

namespace sppos {
namespace {

enum class Kind { kNecklace, kDecPerm, kLe, kBases, kNonAdjacent };

const std::map<std::string, Kind>& KindNames() {
  static const auto* names = new std::map<std::string, Kind>{
      {"necklace", Kind::kNecklace},
      {"decperm", Kind::kDecPerm},
      {"le", Kind::kLe},
      {"bases", Kind::kBases},
      {"nonadjacent", Kind::kNonAdjacent},
  };
  return *names;
}

// Ends a command early with `code`; `message` goes to stderr.
class CommandExit : public std::runtime_error {
 public:
  CommandExit(int code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

struct Options {
  std::string input;
  std::string kind;
  std::string from;
  std::string to;
  std::string format = "json";
  std::optional<int> n;
  std::optional<int> k;
  bool count_only = false;
  bool powerset = false;
  int budget = 6;
};

Kind ParseKind(const std::string& name) {
  const auto it = KindNames().find(name);
  if (it == KindNames().end()) {
    throw CommandExit(kExitInvalid, "unknown representation \"" + name + "\"");
  }
  return it->second;
}

Json ReadJson(const Options& options, std::istream& in) {
  std::ostringstream text;
  if (options.input.empty() || options.input == "-") {
    text << in.rdbuf();
  } else {
    std::ifstream file(options.input);
    if (!file) throw CommandExit(kExitInvalid, "cannot open " + options.input);
    text << file.rdbuf();
  }
  return ParseJson(text.str());
}

int RequireK(const Options& options, std::optional<int> from_input = {}) {
  if (options.k) return *options.k;
  if (from_input) return *from_input;
  throw CommandExit(kExitInvalid, "--k is required for this input");
}

// A positroid in the two forms every conversion starts from.
struct Positroid {
  Matroid matroid;
  GrassmannNecklace necklace;
};

Positroid LoadPositroid(Kind kind, const Json& j, const Options& options) {
  switch (kind) {
    case Kind::kNecklace: {
      GrassmannNecklace necklace = NecklaceFromJson(j);
      return {NecklaceToPositroid(necklace), std::move(necklace)};
    }
    case Kind::kDecPerm: {
      const DecoratedPermutation dp = DecPermFromJson(j);
      GrassmannNecklace necklace = DecPermToNecklace(dp, RequireK(options));
      return {NecklaceToPositroid(necklace), std::move(necklace)};
    }
    case Kind::kLe: {
      const LeDiagram d = LeDiagramFromJson(j);
      if (auto violation = FindLeViolation(d)) {
        throw InvalidInputError(*violation);
      }
      Matroid m = RealizableSets(d);
      GrassmannNecklace necklace = PositroidNecklace(m);
      return {std::move(m), std::move(necklace)};
    }
    case Kind::kBases: {
      Matroid m = MatroidFromJson(j);
      if (!IsPositroid(m)) throw CommandExit(kExitNegative, "not a positroid");
      GrassmannNecklace necklace = PositroidNecklace(m);
      return {std::move(m), std::move(necklace)};
    }
    case Kind::kNonAdjacent: {
      const NonAdjacentInput input = NonAdjacentFromJson(j);
      GrassmannNecklace necklace =
          NecklaceFromNonAdjacent(input.a, RequireK(options, input.k));
      return {NecklaceToPositroid(necklace), std::move(necklace)};
    }
  }
  throw InternalError("unhandled representation");
}

std::string FormatWitness(const NonAdjacentSet& a, int k) {
  std::string out = "sparse-paving A=" + a.set().ToString() + " CH={";
  bool first = true;
  for (int i : a.members()) {
    if (!first) out += ',';
    out += CyclicInterval(k, a.n(), i).ToString();
    first = false;
  }
  return out + "}";
}

int Validate(const Options& options, std::istream& in, std::ostream& out) {
  const Kind kind = ParseKind(options.kind);
  try {
    const Json j = ReadJson(options, in);
    switch (kind) {
      case Kind::kNecklace:
        NecklaceFromJson(j);
        break;
      case Kind::kDecPerm:
        DecPermFromJson(j);
        break;
      case Kind::kLe:
        if (auto violation = FindLeViolation(LeDiagramFromJson(j))) {
          throw InvalidInputError(*violation);
        }
        break;
      case Kind::kBases:
        MatroidFromJson(j);
        break;
      case Kind::kNonAdjacent:
        NonAdjacentFromJson(j);
        break;
    }
  } catch (const InvalidInputError& e) {
    out << "invalid: " << e.what() << '\n';
    return kExitInvalid;
  }
  out << "valid\n";
  return kExitOk;
}

int Convert(const Options& options, std::istream& in, std::ostream& out) {
  const Kind from = ParseKind(options.from);
  const Kind to = ParseKind(options.to);
  const Json j = ReadJson(options, in);
  const Positroid p = LoadPositroid(from, j, options);
  const int n = p.matroid.n();
  const int k = p.matroid.k();
  auto witness = [&]() {
    CheckMiddleRank(k, n);
    auto a = SparsePavingWitness(p.necklace);
    if (!a) throw CommandExit(kExitNegative, "not sparse paving");
    return *a;
  };
  switch (to) {
    case Kind::kNecklace:
      out << NecklaceToJson(p.necklace).dump() << '\n';
      break;
    case Kind::kDecPerm:
      out << DecPermToJson(NecklaceToDecPerm(p.necklace)).dump() << '\n';
      break;
    case Kind::kBases:
      out << MatroidToJson(p.matroid).dump() << '\n';
      break;
    case Kind::kNonAdjacent:
      out << NonAdjacentToJson(witness(), k).dump() << '\n';
      break;
    case Kind::kLe: {
      // U_{k,n} is the full rectangle for every k; otherwise only the sparse
      // paving diagrams are constructed.
      const LeDiagram d = p.matroid == Uniform(k, n)
                              ? LeDiagram::Full(k, n)
                              : BuildSparsePavingDiagram(witness().set(), k);
      if (options.format == "ascii") {
        out << RenderAscii(d);
      } else {
        out << LeDiagramToJson(d).dump() << '\n';
      }
      break;
    }
  }
  return kExitOk;
}

int CheckSparsePaving(const Options& options, std::istream& in,
                      std::ostream& out) {
  const Kind kind = ParseKind(options.kind);
  const Json j = ReadJson(options, in);
  const Positroid p = LoadPositroid(kind, j, options);
  const int n = p.matroid.n();
  const int k = p.matroid.k();
  CheckMiddleRank(k, n);
  std::optional<NonAdjacentSet> a;
  if (kind == Kind::kDecPerm) {
    a = DecPermSparseWitness(DecPermFromJson(j), k);
  } else {
    a = SparsePavingWitness(p.necklace);
  }
  if (a.has_value() != IsSparsePaving(p.matroid)) {
    throw InternalError("necklace criterion disagrees with the bases");
  }
  if (a) {
    out << FormatWitness(*a, k) << '\n';
    return kExitOk;
  }
  const auto pair = FindCloseNonBasisPair(p.matroid);
  if (!pair) throw InternalError("non sparse paving matroid without a pair");
  out << "not sparse-paving: non-bases " << pair->first.ToString() << " and "
      << pair->second.ToString() << " have symmetric difference 2\n";
  return kExitNegative;
}

int Enumerate(const Options& options, std::ostream& out) {
  if (!options.n || !options.k) {
    throw CommandExit(kExitInvalid, "enumerate needs --n and --k");
  }
  const int n = *options.n;
  const int k = *options.k;
  if (options.count_only) {
    out << CountSparsePaving(k, n) << '\n';
    return kExitOk;
  }
  ForEachSparsePavingPositroid(k, n, [&](const SparsePavingPositroid& p) {
    out << CensusRecordToJson(p).dump() << '\n';
  });
  return kExitOk;
}

int Oracle(const Options& options, std::ostream& out) {
  if (!options.n || !options.k) {
    throw CommandExit(kExitInvalid, "oracle needs --n and --k");
  }
  const int n = *options.n;
  const int k = *options.k;
  if (n > options.budget) {
    throw CommandExit(kExitInvalid,
                      "n = " + std::to_string(n) + " exceeds --budget " +
                          std::to_string(options.budget) +
                          "; raise --budget to run larger oracles");
  }
  const NecklaceOracleReport report = RunNecklaceOracle(k, n);
  out << "necklaces: " << report.necklaces << '\n'
      << "sparse paving found: " << report.sparse_paving << '\n'
      << "discrepancies: " << report.discrepancies << '\n';
  bool clean = report.discrepancies == 0;
  if (options.powerset) {
    const BasisFamilyScanReport scan = ScanBasisFamilies(k, n);
    out << "basis families: " << scan.families << '\n'
        << "matroids: " << scan.matroids << '\n'
        << "sparse paving matroids: " << scan.sparse_paving << '\n'
        << "definition disagreements: " << scan.disagreements << '\n';
    clean = clean && scan.disagreements == 0;
  }
  return clean ? kExitOk : kExitInternal;
}

int RenderLe(const Options& options, std::istream& in, std::ostream& out) {
  const LeDiagram d = LeDiagramFromJson(ReadJson(options, in));
  if (auto violation = FindLeViolation(d)) throw InvalidInputError(*violation);
  out << RenderAscii(d);
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err) {
  CLI::App app{"Sparse paving positroids: conversions, checks and census"};
  app.require_subcommand(1);
  Options options;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", options.input, "JSON file (default: stdin)");
  };
  auto add_k = [&](CLI::App* sub) {
    sub->add_option("--k", options.k, "rank");
  };

  CLI::App* validate = app.add_subcommand("validate", "check a JSON input");
  validate->add_option("--kind", options.kind,
                       "necklace|decperm|le|bases|nonadjacent")
      ->required();
  add_input(validate);

  CLI::App* convert =
      app.add_subcommand("convert", "convert between representations");
  convert->add_option("--from", options.from)->required();
  convert->add_option("--to", options.to)->required();
  convert->add_option("--format", options.format, "json|ascii")
      ->check(CLI::IsMember({"json", "ascii"}));
  add_k(convert);
  add_input(convert);

  CLI::App* check_sp =
      app.add_subcommand("check-sp", "decide sparse paving with a witness");
  check_sp->add_option("--kind", options.kind)->required();
  add_k(check_sp);
  add_input(check_sp);

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "census of sparse paving positroids");
  enumerate->add_option("--n", options.n)->required();
  add_k(enumerate);
  enumerate->add_flag("--count-only", options.count_only);

  CLI::App* oracle =
      app.add_subcommand("oracle", "brute-force check of the necklace test");
  oracle->add_option("--n", options.n)->required();
  add_k(oracle);
  oracle->add_option("--budget", options.budget, "largest n allowed");
  oracle->add_flag("--powerset", options.powerset,
                   "also scan every family of k-subsets");

  CLI::App* render_le =
      app.add_subcommand("render-le", "draw a Le-diagram as ASCII");
  add_input(render_le);

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*validate) return Validate(options, in, out);
    if (*convert) return Convert(options, in, out);
    if (*check_sp) return CheckSparsePaving(options, in, out);
    if (*enumerate) return Enumerate(options, out);
    if (*oracle) return Oracle(options, out);
    if (*render_le) return RenderLe(options, in, out);
  } catch (const CommandExit& e) {
    err << "error: " << e.what() << '\n';
    return e.code();
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    // InvalidInputError, DomainError and PreconditionError.
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace sppos
