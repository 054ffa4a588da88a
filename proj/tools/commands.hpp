#pragma once

#include "rht/serialize.hpp"

#include <string>
#include <vector>

namespace rht::cli {

// Bad command-line input (unreadable file, malformed flag values); exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Outcome {
  Json result;
  bool ok = true;
  std::string preamble;  // DSL text printed ahead of the rendered result
};

struct Source {
  std::string file;
  std::string name;
  int max = 12;
};

Outcome validate_cmd(const std::string& file, int max);
Outcome cohomology_cmd(const Source& s);
Outcome minimal_model_cmd(const Source& s);

struct HomotopyArgs {
  Source src;
  bool brackets = false;
  int filtrations = 0;  // 0: skip
  int hurewicz = 0;
  int depth = 8;
};
Outcome homotopy_cmd(const HomotopyArgs& a);

struct BchArgs {
  Source src;
  int nil_class = 3;
  std::string a, b;
};
Outcome bch_cmd(const BchArgs& a);

struct InvariantsArgs {
  Source src;
  std::string massey;  // "a, b, c" as expressions, empty to skip
  int word_bound = -1;
};
Outcome invariants_cmd(const InvariantsArgs& a);

Outcome elliptic_cmd(const std::vector<int>& evens, const std::vector<int>& odds);
Outcome loopspace_cmd(const Source& s);

struct FibrationArgs {
  std::string file;
  std::string base, total, map;
  int max = 12;
};
Outcome pullback_cmd(const FibrationArgs& a);
Outcome fiber_cmd(const FibrationArgs& a);
Outcome holonomy_cmd(const FibrationArgs& a);

struct ConfigArgs {
  std::string file;
  std::string pd;
  int k = 2;
  int max_k = 3;
};
Outcome config_space_cmd(const ConfigArgs& a);
Outcome arrangement_cmd(const std::string& file, const std::string& name);
Outcome catalog_cmd(const std::string& name, const std::vector<std::string>& params);

struct MappingArgs {
  std::string file;
  std::string map;
  int max = 8;
};
Outcome mapping_space_cmd(const MappingArgs& a);

}  // namespace rht::cli
