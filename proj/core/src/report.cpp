#include "hkens/report.hpp"

#include <fstream>

#include "hkens/errors.hpp"
#include "hkens/ingest.hpp"

namespace hkens {

void RunReport::add(const std::string& key, const std::string& value) {
    entries_.emplace_back(key, value);
}

void RunReport::add(const std::string& key, const char* value) {
    entries_.emplace_back(key, std::string(value));
}

void RunReport::add(const std::string& key, double value) {
    entries_.emplace_back(key, format_double(value));
}

void RunReport::add(const std::string& key, std::size_t value) {
    entries_.emplace_back(key, std::to_string(value));
}

std::string RunReport::to_text() const {
    std::string out;
    for (const auto& [key, value] : entries_) {
        out += key;
        out += " = ";
        out += value;
        out += '\n';
    }
    return out;
}

void RunReport::save(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) {
        throw DataError("cannot write '" + path.string() + "'");
    }
    out << to_text();
}

}  // namespace hkens
