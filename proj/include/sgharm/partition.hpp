#pragma once

#include <compare>
#include <string>
#include <vector>

namespace sgh {

// Weakly decreasing positive integer parts; weight() is their sum.
class Partition {
public:
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return parts_[static_cast<std::size_t>(i)]; }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    std::strong_ordering operator<=>(const Partition& o) const {
        return parts_ <=> o.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

std::string to_string(const Partition& p);  // "(3,2)"

}  // namespace sgh
