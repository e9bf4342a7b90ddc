#pragma once

#include <string>

#include "uninorm/optable.hpp"

namespace uninorm {

struct LatticeFile {
  std::string name;
  LatticePtr lattice;
};

struct TableFile {
  std::string lattice_name;
  OpTable table;
};

enum class TableFormat { table, csv, json };

// Throws ParseError for malformed text and the lattice errors for invalid structure.
LatticeFile parse_lattice_file(const std::string& text);
std::string write_lattice_file(const std::string& name, const BoundedLattice& l);

TableFile parse_table_file(const std::string& text, const LatticePtr& lattice);
// Lattice name stored in a table file, without resolving it.
std::string table_file_lattice(const std::string& text);
std::string write_table_file(const std::string& lattice_name, const OpTable& t);

// Row/column grid ("table"), comma-separated values, or the table-file JSON.
std::string render_table(const OpTable& t, TableFormat format, const std::string& lattice_name = "",
                         const std::string& title = "U");

std::string read_file(const std::string& path);  // throws ParseError when unreadable
void write_file(const std::string& path, const std::string& content);

}  // namespace uninorm
