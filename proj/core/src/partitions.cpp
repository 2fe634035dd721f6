#include "oplab/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace oplab {

int Partition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::str() const {
    if (parts.empty()) return "-";
    std::ostringstream out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out << "+";
        out << parts[i];
    }
    return out.str();
}

int Overpartition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<int> Overpartition::non_overlined_parts() const {
    std::vector<int> rest;
    rest.reserve(parts.size());
    size_t k = 0;  // overlined sizes, descending like parts
    std::vector<int> marks = overlined;
    std::sort(marks.rbegin(), marks.rend());
    for (int p : parts) {
        if (k < marks.size() && marks[k] == p) {
            ++k;  // drop the first occurrence of an overlined size
            continue;
        }
        rest.push_back(p);
    }
    return rest;
}

std::string Overpartition::str() const {
    if (parts.empty()) return "-";
    std::ostringstream out;
    std::vector<int> marks = overlined;
    std::sort(marks.rbegin(), marks.rend());
    size_t k = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out << "+";
        out << parts[i];
        if (k < marks.size() && marks[k] == parts[i]) {
            out << "~";
            ++k;
        }
    }
    return out.str();
}

int rank(const Partition& p) {
    return p.parts.empty() ? 0 : p.parts.front() - static_cast<int>(p.parts.size());
}

int rank(const Overpartition& o) {
    return o.parts.empty() ? 0 : o.parts.front() - static_cast<int>(o.parts.size());
}

int crank_of_parts(std::span<const int> parts) {
    if (parts.empty()) throw EmptyPartition("crank of the empty partition is undefined");
    int ones = 0;
    for (auto it = parts.rbegin(); it != parts.rend() && *it == 1; ++it) ++ones;
    if (ones == 0) return parts.front();
    int larger = 0;
    for (int p : parts) {
        if (p > ones)
            ++larger;
        else
            break;
    }
    return larger - ones;
}

int crank(const Partition& p) { return crank_of_parts(p.parts); }

std::vector<std::pair<int, int>> crank_weights(std::span<const int> parts) {
    if (parts.empty()) return {{0, 1}};
    if (parts.size() == 1 && parts[0] == 1) return {{-1, 1}, {0, -1}, {1, 1}};
    return {{crank_of_parts(parts), 1}};
}

std::vector<std::pair<int, int>> residual_crank_weights(const Overpartition& o) {
    const std::vector<int> rest = o.non_overlined_parts();
    return crank_weights(rest);
}

Overpartition OverpartitionView::materialize() const {
    Overpartition o;
    o.parts.assign(parts.begin(), parts.end());
    for (int i = 0; i < size_count(); ++i)
        if (is_overlined(i)) o.overlined.push_back(sizes[i]);
    return o;
}

std::vector<Partition> gen_partitions(int n) {
    std::vector<Partition> all;
    for_each_partition(n, [&](std::span<const int> parts) {
        all.push_back(Partition{{parts.begin(), parts.end()}});
    });
    return all;
}

std::vector<Overpartition> gen_overpartitions(int n) {
    std::vector<Overpartition> all;
    for_each_overpartition(n, [&](const OverpartitionView& view) {
        all.push_back(view.materialize());
    });
    return all;
}

std::vector<long long> distinct_partition_counts(int n_max) {
    std::vector<long long> q(static_cast<size_t>(n_max) + 1, 0);
    q[0] = 1;
    for (int s = 1; s <= n_max; ++s)
        for (int j = n_max; j >= s; --j) q[j] += q[j - s];
    return q;
}

}  // namespace oplab
