#include "hapdc/csv.hpp"

#include <charconv>
#include <system_error>

namespace hapdc {

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

void CsvWriter::sep() {
    if (!first_in_row_) {
        buffer_ += ',';
    }
    first_in_row_ = false;
}

void CsvWriter::field(const std::string& v) {
    sep();
    buffer_ += v;
}

void CsvWriter::field(double v) {
    sep();
    buffer_ += format_double(v);
}

void CsvWriter::field(int v) {
    sep();
    buffer_ += std::to_string(v);
}

void CsvWriter::field(bool v) {
    sep();
    buffer_ += v ? '1' : '0';
}

}  // namespace hapdc
