#include "claws/session.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "claws/error.hpp"
#include "claws/syntax.hpp"

namespace claws {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

[[noreturn]] void session_error(int line, const std::string& what) {
  throw Error(ErrorKind::SessionError, "line " + std::to_string(line) + ": " + what);
}

int parse_bound(const std::string& value, int line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size() || v < 0) session_error(line, "expected a non-negative integer");
    return v;
  } catch (const std::logic_error&) {
    session_error(line, "expected a non-negative integer");
  }
}

}  // namespace

DiffExpr Session::parse(std::string_view text) const { return parse_expr(text, names); }

Session parse_session(std::string_view text) {
  std::optional<JetIndex> lead;
  std::optional<DiffExpr> rhs;
  std::map<std::string, DiffExpr> names;
  Ansatz ansatz;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string content = trim(raw);
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) session_error(line, "expected 'key = value'");
    const std::string key = trim(std::string_view(content).substr(0, eq));
    const std::string value = trim(std::string_view(content).substr(eq + 1));

    if (key == "lead") {
      const DiffExpr e = parse_expr(value);
      const auto jets = jet_variables(e);
      if (jets.size() != 1 || e != DiffExpr::jet(*jets.begin()))
        session_error(line, "lead must be a single jet variable such as u_t");
      lead = *jets.begin();
    } else if (key == "rhs") {
      rhs = parse_expr(value, names);
    } else if (key.compare(0, 5, "name ") == 0) {
      const std::string id = trim(std::string_view(key).substr(5));
      if (id.empty() || id == "t" || id == "x" || id == "u" || id.compare(0, 2, "u_") == 0 ||
          !(std::isalpha(static_cast<unsigned char>(id[0])) || id[0] == '_'))
        session_error(line, "invalid name '" + id + "'");
      names[id] = parse_expr(value, names);
    } else if (key == "order") {
      ansatz.max_order = parse_bound(value, line);
    } else if (key == "jet-degree") {
      ansatz.max_jet_degree = parse_bound(value, line);
    } else if (key == "t-degree") {
      ansatz.max_t_degree = parse_bound(value, line);
    } else if (key == "x-degree") {
      ansatz.max_x_degree = parse_bound(value, line);
    } else {
      session_error(line, "unknown key '" + key + "'");
    }
  }
  if (!lead) throw Error(ErrorKind::SessionError, "missing 'lead'");
  if (!rhs) throw Error(ErrorKind::SessionError, "missing 'rhs'");
  return Session{make_pde(*lead, *rhs), std::move(names), ansatz};
}

Session load_session(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::SessionError, "cannot read session file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_session(buffer.str());
}

}  // namespace claws
