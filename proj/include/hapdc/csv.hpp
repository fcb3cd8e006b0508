#pragma once

#include <string>

namespace hapdc {

// Locale-independent shortest-round-trip formatting; identical inputs give
// identical bytes.
std::string format_double(double value);

class CsvWriter {
public:
    explicit CsvWriter(std::string header) : buffer_(std::move(header)) { buffer_ += '\n'; }

    void begin_row() { first_in_row_ = true; }
    void end_row() { buffer_ += '\n'; }

    void field(const std::string& v);
    void field(double v);
    void field(int v);
    void field(bool v);  // written as 0/1

    const std::string& str() const { return buffer_; }

private:
    void sep();
    std::string buffer_;
    bool first_in_row_ = true;
};

}  // namespace hapdc
