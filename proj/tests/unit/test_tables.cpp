#include "doctest.h"

#include <set>
#include <sstream>

#include "bessel/tables.hpp"

using namespace bessel;

TEST_SUITE("tables") {

TEST_CASE("transcription grammar") {
    std::istringstream in("# comment\n\nT4 IVa | rho=all | L=L(s, nu^3/2*sigma)\nT6 VId | rho={sigma} | module=x | flag=typo\n");
    const auto lines = parse_transcription(in);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0].table == "T4");
    CHECK(lines[0].key == "IVa");
    CHECK(lines[0].lineno == 3);
    REQUIRE(lines[0].field("L") != nullptr);
    CHECK(*lines[0].field("L") == "L(s, nu^3/2*sigma)");
    CHECK(lines[1].flag == "typo");
    CHECK(lines[1].field("flag") == nullptr);
}

TEST_CASE("every table agrees with the transcription") {
    const auto lines = read_transcription(BESSEL_TABLES_FILE);
    const TableDiff d = diff_tables(lines);
    for (const auto& c : d.mismatches())
        MESSAGE("line " << c.lineno << " " << c.key << " " << c.field << ": " << c.expected << " | " << c.got);
    CHECK(d.mismatches().empty());
    for (const char* t : {"T1", "T2", "T3", "T4", "T5", "T6", "T7"}) CHECK(d.count(t) > 0);
    for (const auto& c : d.deviations()) CHECK((c.flag == "open-question" || c.flag == "typo"));
}

TEST_CASE("the engine's own dump diffs clean") {
    std::stringstream ss;
    for (const auto& l : dump_tables()) ss << l << "\n";
    const auto lines = parse_transcription(ss);
    std::set<std::string> tables;
    for (const auto& l : lines) tables.insert(l.table);
    CHECK(tables.size() == 7);
    CHECK(diff_tables(lines).mismatches().empty());
}

}
