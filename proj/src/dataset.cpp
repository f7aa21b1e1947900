#include "binclust/dataset.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace binclust {

BinaryDataset::BinaryDataset(std::size_t n, std::size_t p,
                             std::vector<std::uint8_t> values,
                             std::vector<std::string> ids)
    : n_(n), p_(p), values_(std::move(values)), ids_(std::move(ids)) {
    if (n_ < 2) throw std::invalid_argument("BinaryDataset: need at least 2 objects");
    if (p_ < 1) throw std::invalid_argument("BinaryDataset: need at least 1 variable");
    if (values_.size() != n_ * p_)
        throw std::invalid_argument("BinaryDataset: values size does not match n*p");
    for (std::uint8_t v : values_) {
        if (v != 0 && v != 1)
            throw std::invalid_argument("BinaryDataset: entries must be 0 or 1");
    }
    if (!ids_.empty() && ids_.size() != n_)
        throw std::invalid_argument("BinaryDataset: ids size does not match n");
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        // trim surrounding whitespace and a trailing \r from CRLF files
        std::size_t b = cell.find_first_not_of(" \t\r");
        std::size_t e = cell.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    return out;
}

bool all_binary(const std::vector<std::string>& cells) {
    for (const auto& c : cells) {
        if (c != "0" && c != "1") return false;
    }
    return !cells.empty();
}

}  // namespace

BinaryDataset read_dataset_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset file: " + path);

    std::vector<std::uint8_t> values;
    std::size_t p = 0;
    std::size_t n = 0;
    std::string line;
    bool first = true;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto cells = split_csv_line(line);
        if (first) {
            first = false;
            if (!all_binary(cells)) continue;  // header row
        }
        if (!all_binary(cells))
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": cell not in {0,1}");
        if (p == 0) {
            p = cells.size();
        } else if (cells.size() != p) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": inconsistent column count");
        }
        for (const auto& c : cells) values.push_back(c == "1" ? 1 : 0);
        ++n;
    }
    if (n < 2) throw std::runtime_error(path + ": dataset needs at least 2 rows");
    return BinaryDataset(n, p, std::move(values));
}

void write_dataset_csv(const BinaryDataset& data, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write dataset file: " + path);
    for (std::size_t i = 0; i < data.n(); ++i) {
        for (std::size_t j = 0; j < data.p(); ++j) {
            if (j) out << ',';
            out << int(data.at(i, j));
        }
        out << '\n';
    }
}

}  // namespace binclust
