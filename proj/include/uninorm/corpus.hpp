#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uninorm/constructions.hpp"

namespace uninorm {

enum class Verdict { uninorm, not_uninorm };

std::string_view to_string(Verdict v);

// A printed cell that contradicts the construction formula; the formula value is used.
struct CellErratum {
  std::string table;
  ElementId row;
  ElementId col;
  ElementId printed;
  ElementId formula;
  std::string justification;
};

// A printed verdict that exhaustive verification contradicts.
struct VerdictErratum {
  Verdict claimed;
  Verdict observed;
  std::string justification;
};

struct CorpusEntry {
  std::string id;
  LatticePtr lattice;
  // Tables as printed: "Ustar" (inner) and the constructed table ("U1" or "U2").
  std::map<std::string, OpTable> tables;
  std::string constructed;
  ConstructionSpec spec;
  Theorem theorem;
  // Verdict stated in the source for the constructed table.
  Verdict expected_verdict;
  std::vector<CellErratum> errata;
  std::optional<VerdictErratum> verdict_erratum;
  // How ambiguous parts of the lattice were resolved.
  std::vector<std::string> notes;

  // Printed table with cell errata replaced by formula values.
  OpTable corrected(const std::string& table) const;
  // Verdict replay must observe: the erratum's observed verdict when one is recorded.
  Verdict replay_verdict() const { return verdict_erratum ? verdict_erratum->observed : expected_verdict; }
};

const std::vector<std::string>& corpus_ids();

// Throws UnknownId.
CorpusEntry load_corpus(const std::string& id);

struct ReplayResult {
  std::string id;
  bool cells_ok = false;
  bool verdict_ok = false;
  std::vector<std::array<ElementId, 2>> diff;
  Verdict observed = Verdict::not_uninorm;
  std::string message;

  bool ok() const { return cells_ok && verdict_ok; }
};

std::vector<ReplayResult> replay_all();

}  // namespace uninorm
