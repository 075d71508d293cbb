#include "khoss/report.hpp"

#include <sstream>

#include "json.hpp"

namespace khoss {

namespace {

nlohmann::ordered_json pages_json(const std::vector<PageTable>& pages) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& p : pages) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& [key, rank] : p.ranks) {
      entries.push_back({{"h", key.first}, {"delta", key.second}, {"rank", rank}});
    }
    arr.push_back({{"r", p.r}, {"stabilized", p.stabilized}, {"ranks", entries}});
  }
  return arr;
}

}  // namespace

std::string render_report(const ComputeReport& r, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["theory"] = r.theory;
    j["input"] = r.input;
    nlohmann::ordered_json ranks;
    if (r.has_bigraded) {
      nlohmann::ordered_json bg;
      for (const auto& [key, rank] : r.bigraded)
        bg[std::to_string(key.first) + "," + std::to_string(key.second)] = rank;
      ranks["bigraded"] = bg;
    } else {
      nlohmann::ordered_json dr;
      for (const auto& [delta, rank] : r.delta_ranks) dr[std::to_string(delta)] = rank;
      ranks["delta"] = dr;
    }
    j["ranks"] = ranks;
    if (r.has_pages) j["pages"] = pages_json(r.pages);
    return j.dump(2) + "\n";
  }
  if (format == "csv") {
    std::ostringstream os;
    if (r.has_bigraded) {
      os << "h,q,rank\n";
      for (const auto& [key, rank] : r.bigraded)
        os << key.first << "," << key.second << "," << rank << "\n";
    } else {
      os << "delta,rank\n";
      for (const auto& [delta, rank] : r.delta_ranks) os << delta << "," << rank << "\n";
    }
    if (r.has_pages) {
      os << "page,h,delta,rank\n";
      for (const auto& p : r.pages)
        for (const auto& [key, rank] : p.ranks)
          os << p.r << "," << key.first << "," << key.second << "," << rank << "\n";
    }
    return os.str();
  }
  // text
  std::ostringstream os;
  os << "theory: " << r.theory << "\n";
  os << "input:  " << r.input << "\n";
  if (r.has_bigraded) {
    os << "ranks by (h, q):\n";
    if (r.bigraded.empty()) os << "  (trivial)\n";
    for (const auto& [key, rank] : r.bigraded)
      os << "  h=" << key.first << " q=" << key.second << "  rank " << rank << "\n";
  } else {
    os << "ranks by delta:\n";
    if (r.delta_ranks.empty()) os << "  (trivial)\n";
    for (const auto& [delta, rank] : r.delta_ranks)
      os << "  delta=" << delta << "  rank " << rank << "\n";
  }
  if (r.has_pages) {
    for (const auto& p : r.pages) {
      os << "page E_" << p.r << (p.stabilized ? " (stable)" : "") << ":";
      if (p.ranks.empty()) os << " (trivial)";
      os << "\n";
      for (const auto& [key, rank] : p.ranks)
        os << "  h=" << key.first << " delta=" << key.second << "  rank " << rank << "\n";
    }
  }
  return os.str();
}

std::string render_matrix(const SparseMapF2& m) {
  std::ostringstream os;
  for (int c = 0; c < m.cols(); ++c) {
    os << c << ":";
    for (int r : m.column(c)) os << " " << r;
    os << "\n";
  }
  return os.str();
}

}  // namespace khoss
