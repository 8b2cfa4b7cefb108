#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef FONDLTL_TEST_DATA
#error "FONDLTL_TEST_DATA must name the test data directory"
#endif

namespace corpus {

inline const std::vector<std::string> kFuture = {
    "F(a)",
    "G(a)",
    "a U b",
    "a R b",
    "X(a)",
    "WX(a)",
    "F(vehicleat(l13))",
    "true",
    "false",
    "a",
    "!a & b",
    "F(a) & F(b)",
    "F(a & X(b))",
    "G(a -> F(b))",
    "G(a -> X(b))",
    "(a U b) | G(c)",
    "!(a U b)",
    "X(X(a))",
    "WX(WX(false))",
    "F(G(a))",
    "G(F(a))",
    "a U (b U c)",
    "(a R b) & F(c)",
    "F(a) | F(b)",
    "a <-> X(b)",
    "!F(a & b) & G(c)",
};

inline const std::vector<std::string> kPast = {
    "Y(a)",
    "a S b",
    "O(a)",
    "H(a)",
    "vehicleat(l13) & O(vehicleat(l23))",
    "O(a) & O(b)",
    "a & Y(b)",
    "H(a -> O(b))",
    "Y(Y(a))",
    "!Y(a)",
    "O(a & Y(b))",
    "a S (b S c)",
    "H(a) | O(b)",
    "!(a S b)",
    "c & O(a) & !O(b)",
    "Y(a) | Y(b)",
    "O(H(a))",
    "H(O(a))",
    "a -> O(b)",
    "(a S b) & H(c)",
    "!H(a)",
    "Y(!a) & a",
};

inline std::string data(const std::string& rel) { return std::string(FONDLTL_TEST_DATA) + "/" + rel; }

inline std::string read(const std::string& rel) {
    std::ifstream in(data(rel), std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Every PDDL file under the data directory, relative paths, sorted.
inline std::vector<std::string> pddl_files() {
    std::vector<std::string> out;
    const std::filesystem::path root(FONDLTL_TEST_DATA);
    for (const auto& e : std::filesystem::recursive_directory_iterator(root)) {
        if (e.is_regular_file() && e.path().extension() == ".pddl") {
            out.push_back(std::filesystem::relative(e.path(), root).generic_string());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_problem(const std::string& text) { return text.find("(problem") != std::string::npos; }

}  // namespace corpus
