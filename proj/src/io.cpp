#include "uninorm/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace uninorm {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed file: ") + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be a list");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw ParseError(std::string(what) + " entries must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::string quoted(const std::string& s) { return json(s).dump(); }

std::string inline_list(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + quoted(items[i]);
  return out + "]";
}

std::vector<std::string> carrier_names(const OpTable& t) {
  std::vector<std::string> out;
  for (ElementId x : t.carrier_elements()) out.push_back(t.lattice().name(x));
  return out;
}

std::vector<std::string> row_names(const OpTable& t, ElementId a) {
  std::vector<std::string> out;
  for (ElementId b : t.carrier_elements()) out.push_back(t.lattice().name(t.at(a, b)));
  return out;
}

}  // namespace

LatticeFile parse_lattice_file(const std::string& text) {
  json j = parse_json(text);
  LatticeFile out;
  const json& name = field(j, "name");
  if (!name.is_string()) throw ParseError("name must be a string");
  out.name = name.get<std::string>();
  auto elements = string_list(field(j, "elements"), "elements");
  const bool full = j.contains("le_pairs");
  if (full == j.contains("covers")) throw ParseError("exactly one of 'covers' and 'le_pairs' is required");
  const json& rel = j.at(full ? "le_pairs" : "covers");
  if (!rel.is_array()) throw ParseError("relation must be a list of pairs");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& p : rel) {
    auto two = string_list(p, "relation pair");
    if (two.size() != 2) throw ParseError("relation pairs must have two entries");
    pairs.emplace_back(two[0], two[1]);
  }
  out.lattice = std::make_shared<const BoundedLattice>(
      BoundedLattice::build(std::move(elements), pairs, full ? RelationMode::full : RelationMode::covers));
  return out;
}

std::string write_lattice_file(const std::string& name, const BoundedLattice& l) {
  std::ostringstream os;
  os << "{\n  \"name\": " << quoted(name) << ",\n  \"elements\": " << inline_list(l.names()) << ",\n";
  os << "  \"covers\": [";
  auto covers = l.covers();
  for (std::size_t i = 0; i < covers.size(); ++i) {
    os << (i ? ",\n" : "\n") << "    " << inline_list({l.name(covers[i].first), l.name(covers[i].second)});
  }
  os << (covers.empty() ? "]\n" : "\n  ]\n") << "}\n";
  return os.str();
}

std::string table_file_lattice(const std::string& text) {
  json j = parse_json(text);
  const json& name = field(j, "lattice");
  if (!name.is_string()) throw ParseError("lattice must be a string");
  return name.get<std::string>();
}

TableFile parse_table_file(const std::string& text, const LatticePtr& lattice) {
  json j = parse_json(text);
  std::string lname = table_file_lattice(text);
  auto carrier_list = string_list(field(j, "carrier"), "carrier");
  ElementSet carrier;
  std::vector<ElementId> order;
  for (const auto& n : carrier_list) {
    auto x = lattice->find(n);
    if (!x) throw ParseError("carrier element '" + n + "' is not in lattice " + lname);
    if (carrier.contains(*x)) throw ParseError("carrier lists '" + n + "' twice");
    carrier.insert(*x);
    order.push_back(*x);
  }
  if (carrier.empty()) throw ParseError("carrier is empty");
  const json& rows = field(j, "rows");
  if (!rows.is_array() || rows.size() != order.size()) throw ParseError("rows must list one row per carrier element");
  std::vector<std::vector<ElementId>> grid;
  for (const auto& row : rows) {
    auto names = string_list(row, "row");
    if (names.size() != order.size()) throw ParseError("table is not square");
    std::vector<ElementId> r;
    for (const auto& n : names) {
      auto x = lattice->find(n);
      if (!x) throw ParseError("table value '" + n + "' is not in lattice " + lname);
      r.push_back(*x);
    }
    grid.push_back(std::move(r));
  }
  // Rows may list the carrier in any order; the table stores ascending ids.
  std::vector<std::size_t> pos(kMaxElements);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i].index()] = i;
  OpTable t = OpTable::from_function(lattice, carrier, [&](ElementId a, ElementId b) {
    return grid[pos[a.index()]][pos[b.index()]];
  });
  return TableFile{lname, std::move(t)};
}

std::string write_table_file(const std::string& lattice_name, const OpTable& t) {
  std::ostringstream os;
  os << "{\n  \"lattice\": " << quoted(lattice_name) << ",\n  \"carrier\": " << inline_list(carrier_names(t))
     << ",\n  \"rows\": [";
  const auto& el = t.carrier_elements();
  for (std::size_t i = 0; i < el.size(); ++i) os << (i ? ",\n" : "\n") << "    " << inline_list(row_names(t, el[i]));
  os << "\n  ]\n}\n";
  return os.str();
}

std::string render_table(const OpTable& t, TableFormat format, const std::string& lattice_name,
                         const std::string& title) {
  if (format == TableFormat::json) return write_table_file(lattice_name, t);
  const auto& el = t.carrier_elements();
  const auto header = carrier_names(t);
  std::ostringstream os;
  if (format == TableFormat::csv) {
    os << title;
    for (const auto& h : header) os << ',' << h;
    os << '\n';
    for (std::size_t i = 0; i < el.size(); ++i) {
      os << header[i];
      for (const auto& v : row_names(t, el[i])) os << ',' << v;
      os << '\n';
    }
    return os.str();
  }
  std::size_t width = title.size();
  for (const auto& n : t.lattice().names()) width = std::max(width, n.size());
  auto pad = [&](const std::string& s) { return s + std::string(width - s.size(), ' '); };
  auto line = [&](const std::string& head, const std::vector<std::string>& cells) {
    std::string out = pad(head) + " |";
    for (const auto& c : cells) out += " " + pad(c);
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out + "\n";
  };
  os << line(title, header);
  os << std::string(width + 1, '-') << '+' << std::string(el.size() * (width + 1), '-') << '\n';
  for (std::size_t i = 0; i < el.size(); ++i) os << line(header[i], row_names(t, el[i]));
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

}  // namespace uninorm
