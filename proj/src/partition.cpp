#include "sgharm/partition.hpp"

#include <stdexcept>

namespace sgh {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition part must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

std::string to_string(const Partition& p) {
    std::string s = "(";
    for (int i = 0; i < p.rows(); ++i) {
        if (i) s += ",";
        s += std::to_string(p.part(i));
    }
    s += ")";
    return s;
}

}  // namespace sgh
