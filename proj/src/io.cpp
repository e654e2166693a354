#include "zplab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace zplab {

std::string format_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string seq_to_json(const SeqVector& x) {
  std::ostringstream out;
  out << "{\"entries\":[";
  bool first = true;
  for (const auto& e : x.entries()) {
    if (!first) out << ",";
    first = false;
    out << "[" << e.index << "," << format_double(e.value) << "]";
  }
  out << "]}";
  return out.str();
}

std::string twisted_to_json(const TwistedVector& z) {
  return "{\"x\":" + seq_to_json(z.x) + ",\"y\":" + seq_to_json(z.y) + "}";
}

std::string growth_table_to_csv(const GrowthTable& table) {
  std::ostringstream out;
  out << "n,value,reference,law\n";
  for (const auto& row : table.rows)
    out << row.n << "," << format_double(row.value) << ","
        << format_double(row.reference) << "," << table.law << "\n";
  return out.str();
}

std::string growth_table_to_json(const GrowthTable& table) {
  std::ostringstream out;
  out << "{\"law\":\"" << table.law << "\",\"rows\":[";
  bool first = true;
  for (const auto& row : table.rows) {
    if (!first) out << ",";
    first = false;
    out << "{\"n\":" << row.n << ",\"value\":" << format_double(row.value)
        << ",\"reference\":" << format_double(row.reference) << "}";
  }
  out << "]}";
  return out.str();
}

std::string system_to_json(const BiorthSystem& sys) {
  std::ostringstream out;
  out << "{\"p\":" << format_double(sys.p.value())
      << ",\"delta\":" << format_double(sys.delta) << ",\"space\":\""
      << (sys.tag == SpaceTag::Ellp ? "ellp" : "zp") << "\",\"families\":[";
  auto emit_side = [&](const std::vector<TwistedVector>& side) {
    out << "[";
    bool first = true;
    for (const auto& z : side) {
      if (!first) out << ",";
      first = false;
      if (sys.tag == SpaceTag::Ellp)
        out << seq_to_json(z.x);
      else
        out << twisted_to_json(z);
    }
    out << "]";
  };
  bool first = true;
  for (const auto& fam : sys.families) {
    if (!first) out << ",";
    first = false;
    out << "{\"A\":";
    emit_side(fam.A);
    out << ",\"Astar\":";
    emit_side(fam.Astar);
    out << "}";
  }
  out << "]}";
  return out.str();
}

namespace {

SeqVector seq_from(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("entries"))
    throw std::invalid_argument("vector JSON must be {\"entries\": [[i,v],...]}");
  std::vector<SeqVector::Entry> entries;
  std::int64_t prev = 0;
  for (const auto& pair : j.at("entries")) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("vector entry must be [index, value]");
    std::int64_t index = pair[0].get<std::int64_t>();
    if (index <= prev)
      throw std::invalid_argument("vector entries must have strictly increasing indices");
    prev = index;
    entries.push_back({index, pair[1].get<double>()});
  }
  return SeqVector(std::move(entries));
}

TwistedVector element_from(const nlohmann::json& j, SpaceTag tag,
                           const PExponent& p) {
  if (tag == SpaceTag::Ellp) return {seq_from(j), {}, p};
  return {seq_from(j.at("x")), seq_from(j.at("y")), p};
}

}  // namespace

SeqVector seq_from_json(const std::string& text) {
  return seq_from(nlohmann::json::parse(text));
}

BiorthSystem system_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  PExponent p(j.at("p").get<double>());
  std::string space = j.value("space", "ellp");
  SpaceTag tag;
  if (space == "ellp")
    tag = SpaceTag::Ellp;
  else if (space == "zp")
    tag = SpaceTag::Zp;
  else
    throw std::invalid_argument("system: space must be 'ellp' or 'zp'");
  BiorthSystem sys{p, j.at("delta").get<double>(), tag, {}};
  PExponent q = p.dual_exponent();
  for (const auto& fam : j.at("families")) {
    BiorthSystem::Family family;
    for (const auto& e : fam.at("A"))
      family.A.push_back(element_from(e, tag, p));
    for (const auto& e : fam.at("Astar"))
      family.Astar.push_back(element_from(e, tag, q));
    sys.families.push_back(std::move(family));
  }
  check_well_formed(sys);
  return sys;
}

BiorthSystem load_system(const std::string& path) {
  return system_from_json(read_file(path));
}

std::vector<SeqVector> seq_list_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<SeqVector> out;
  for (const auto& e : j) out.push_back(seq_from(e));
  return out;
}

std::vector<TwistedVector> pairs_from_json(const std::string& text,
                                           const PExponent& p) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<TwistedVector> out;
  for (const auto& e : j)
    out.push_back({seq_from(e.at("x")), seq_from(e.at("y")), p});
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace zplab
