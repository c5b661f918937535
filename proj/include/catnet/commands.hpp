#pragma once

// Subcommands of the catnet tool. Each returns the process exit code:
// 0 ok, 1 semantic failure, 2 input error. Documents and DOT go to `out`,
// diagnostics to `err`.

#include <iosfwd>
#include <string>
#include <vector>

namespace catnet::cli {

inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kBadInput = 2;

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_check_gis(const std::string& path, std::ostream& out, std::ostream& err);
/// `input` is a document path or a builtin name.
int cmd_elements(const std::string& input, bool rel, std::ostream& out, std::ostream& err);

struct ExportOptions {
  std::vector<std::string> highlight;
  bool undirected = false;
  bool keep_identities = false;
  bool unicode = false;
};

/// `input` is a document path or a builtin name; "chicken-wire" implies
/// --highlight P,L,R --undirected.
int cmd_export_dot(const std::string& input, const ExportOptions& options, std::ostream& out,
                   std::ostream& err);
int cmd_isography(const std::string& a, const std::string& b, bool search, std::ostream& out,
                  std::ostream& err);
int cmd_apply(const std::string& net, const std::string& morphism, std::ostream& out,
              std::ostream& err);
int cmd_builtin(const std::string& name, std::ostream& out, std::ostream& err);

/// Full command line, argv[0] included.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace catnet::cli
