#pragma once

#include <string>
#include <vector>

#include "symchar/errors.hpp"

namespace symchar {

// An integer partition: weakly decreasing positive parts. The empty partition
// is the unique partition of 0. size() is the sum of parts, length() the
// number of parts.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    // 1-based row index; 0 beyond the last part.
    int part(int i) const;

    Partition conjugate() const;
    bool contains(const Partition& inner) const;

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    // "3,2,1"; the empty partition renders as "0".
    std::string to_string() const;
    static Partition parse(const std::string& text);

  private:
    std::vector<int> parts_;
    int size_ = 0;
};

// A skew shape outer/inner. Construction requires containment; formulas that
// could produce non-contained pairs must branch before constructing.
class SkewShape {
  public:
    explicit SkewShape(Partition outer, Partition inner = Partition());

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    int size() const { return outer_.size() - inner_.size(); }

    bool operator==(const SkewShape&) const = default;

    // "3,1/1"; straight shapes render as the outer partition alone.
    std::string to_string() const;

  private:
    Partition outer_;
    Partition inner_;
};

// (n, lam_1, ..., lam_t): prepends n as a new first row. Requires n >= lam_1
// and n >= 1.
Partition first_row_extend(const Partition& lam, int n);

// The column (1^j); j = 0 gives the empty partition.
Partition column_strip(int j);

// Hook length of every cell, row by row.
std::vector<std::vector<int>> hook_lengths(const Partition& lam);

// All partitions of k in descending lexicographic order. partitions_of(0)
// holds just the empty partition.
std::vector<Partition> partitions_of(int k);

} // namespace symchar
