#include "symchar/partition.hpp"

#include <algorithm>
#include <sstream>

namespace symchar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw DomainError("partition parts must be positive: " + std::to_string(parts_[i]));
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw DomainError("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

int Partition::part(int i) const {
    if (i < 1) throw DomainError("partition rows are 1-based");
    return i <= length() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> cols(parts_[0]);
    for (int j = 0; j < parts_[0]; ++j) {
        int count = 0;
        while (count < length() && parts_[count] > j) ++count;
        cols[j] = count;
    }
    return Partition(std::move(cols));
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner.parts_[i] > parts_[i]) return false;
    return true;
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty partition text");
    if (s == "0") return Partition();
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad partition part '" + tok + "' in '" + text + "'");
        long v = std::stol(tok);
        if (v < 1 || v > 1000000) throw ParseError("partition part out of range in '" + text + "'");
        parts.push_back(static_cast<int>(v));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    try {
        return Partition(std::move(parts));
    } catch (const DomainError& e) {
        throw ParseError(std::string(e.what()) + " in '" + text + "'");
    }
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_))
        throw DomainError("skew shape requires inner contained in outer: " + inner_.to_string() +
                          " not in " + outer_.to_string());
}

std::string SkewShape::to_string() const {
    if (inner_.empty()) return outer_.to_string();
    return outer_.to_string() + "/" + inner_.to_string();
}

Partition first_row_extend(const Partition& lam, int n) {
    if (n < 1) throw DomainError("first row must be positive");
    if (!lam.empty() && n < lam.parts()[0])
        throw DomainError("first_row_extend: n = " + std::to_string(n) + " is smaller than " +
                          std::to_string(lam.parts()[0]));
    std::vector<int> parts;
    parts.reserve(lam.length() + 1);
    parts.push_back(n);
    parts.insert(parts.end(), lam.parts().begin(), lam.parts().end());
    return Partition(std::move(parts));
}

Partition column_strip(int j) {
    if (j < 0) throw DomainError("column strip length must be non-negative");
    return Partition(std::vector<int>(j, 1));
}

std::vector<std::vector<int>> hook_lengths(const Partition& lam) {
    Partition conj = lam.conjugate();
    std::vector<std::vector<int>> table(lam.length());
    for (int i = 1; i <= lam.length(); ++i) {
        table[i - 1].resize(lam.part(i));
        for (int j = 1; j <= lam.part(i); ++j)
            table[i - 1][j - 1] = lam.part(i) - j + conj.part(j) - i + 1;
    }
    return table;
}

namespace {

void enumerate_parts(int remaining, int max_part, std::vector<int>& current,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(current));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        current.push_back(p);
        enumerate_parts(remaining - p, p, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int k) {
    if (k < 0) throw DomainError("cannot partition a negative integer");
    std::vector<Partition> out;
    std::vector<int> current;
    enumerate_parts(k, k, current, out);
    return out;
}

} // namespace symchar
