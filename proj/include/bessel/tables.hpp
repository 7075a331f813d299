#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace bessel {

// "<table> <key> | field=value | ..." as in tests/data/reference_tables.txt
struct TranscriptionLine {
    int lineno = 0;
    std::string table;  // T1 .. T7
    std::string key;    // type name, "IIa.3" for T2
    std::vector<std::pair<std::string, std::string>> fields;
    std::string flag;   // open-question, typo or empty

    const std::string* field(const std::string& name) const;
};

std::vector<TranscriptionLine> parse_transcription(std::istream& in);
std::vector<TranscriptionLine> read_transcription(const std::string& path);

struct CellCheck {
    int lineno = 0;
    std::string table, key, field;
    std::string expected, got;
    std::string flag;
    bool ok = false;
};

struct TableDiff {
    std::vector<CellCheck> cells;

    // disagreements on unflagged cells
    std::vector<CellCheck> mismatches() const;
    // disagreements on flagged cells
    std::vector<CellCheck> deviations() const;
    // flagged cells that agree after all
    std::vector<CellCheck> flagged_agreeing() const;
    std::size_t count(const std::string& table) const;
};

// Compares the engine against the transcription; `table` restricts to one table.
TableDiff diff_tables(const std::vector<TranscriptionLine>& lines, const std::string& table = "");

// The engine's own rendering of the seven tables in the transcription grammar.
// T5/T6 get one line per panel character.
std::vector<std::string> dump_tables();

}  // namespace bessel
