#include "khoss/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace khoss {

namespace fs = std::filesystem;

std::string corpus_dir_default() {
  if (const char* env = std::getenv("KHOSS_CORPUS_DIR")) return env;
  return "data/corpus";
}

std::vector<std::string> corpus_names(const std::string& dir) {
  std::vector<std::string> out;
  if (!fs::exists(dir)) return out;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() == ".diag") out.push_back(e.path().stem().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

LinkDiagram load_corpus(const std::string& dir, const std::string& name) {
  fs::path p = fs::path(dir) / (name + ".diag");
  std::ifstream in(p);
  if (!in) throw DiagramError("corpus entry not found: " + p.string());
  LinkDiagram d;
  bool have = false;
  std::string line;
  std::optional<int> basepoint;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream is(line);
    std::string kind;
    is >> kind;
    if (kind == "pd") {
      std::string rest;
      std::getline(is, rest);
      d = parse_pd(rest);
      have = true;
    } else if (kind == "braid") {
      std::string rest;
      std::getline(is, rest);
      d = parse_braid_text(rest);
      have = true;
    } else if (kind == "unknot") {
      d = parse_pd("", true);
      have = true;
    } else if (kind == "basepoint") {
      int e;
      is >> e;
      basepoint = e;
    } else {
      throw DiagramError("bad corpus line in " + p.string() + ": " + line);
    }
  }
  if (!have) throw DiagramError("corpus entry has no diagram: " + p.string());
  if (basepoint) d.basepoint = basepoint;
  return d;
}

LinkDiagram load_input_spec(const std::string& spec, const std::string& corpus_dir) {
  if (spec.rfind("pd:", 0) == 0) return parse_pd(spec.substr(3));
  if (spec.rfind("braid:", 0) == 0) return parse_braid_text(spec.substr(6));
  if (spec.rfind("corpus:", 0) == 0) return load_corpus(corpus_dir, spec.substr(7));
  if (spec == "unknot") return parse_pd("", true);
  return load_corpus(corpus_dir, spec);
}

}  // namespace khoss
