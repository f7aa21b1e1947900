#ifndef BINCLUST_DATASET_HPP
#define BINCLUST_DATASET_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace binclust {

// A binary data table: n objects described by p presence/absence variables.
// Rows are stored contiguously; entries are 0 or 1.
class BinaryDataset {
public:
    BinaryDataset() = default;

    // Takes row-major values of size n*p. Throws std::invalid_argument if
    // any entry is not 0/1 or if n < 2 or p < 1.
    BinaryDataset(std::size_t n, std::size_t p, std::vector<std::uint8_t> values,
                  std::vector<std::string> ids = {});

    std::size_t n() const { return n_; }
    std::size_t p() const { return p_; }

    std::uint8_t at(std::size_t i, std::size_t j) const { return values_[i * p_ + j]; }
    const std::uint8_t* row(std::size_t i) const { return values_.data() + i * p_; }
    const std::vector<std::uint8_t>& values() const { return values_; }
    const std::vector<std::string>& ids() const { return ids_; }

private:
    std::size_t n_ = 0;
    std::size_t p_ = 0;
    std::vector<std::uint8_t> values_;
    std::vector<std::string> ids_;
};

// Reads a CSV file with one row per object and p comma-separated 0/1 cells.
// A first line whose cells are not all 0/1 is treated as a header and
// skipped; any other non-binary cell is an error.
BinaryDataset read_dataset_csv(const std::string& path);

// Writes the dataset as plain 0/1 CSV (no header).
void write_dataset_csv(const BinaryDataset& data, const std::string& path);

}  // namespace binclust

#endif
