#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gallai/procedures.hpp"

namespace gallai::detail {

bool apply_op(int sign, std::string_view op);

Check compare(std::string label, std::int64_t a, std::string_view op, std::int64_t b, bool required = true);
/// lhs op coef * theta^k
Check compare_theta(std::string label, std::int64_t lhs, std::string_view op, std::int64_t coef, int k,
                    const Threshold& theta, bool required = true);

std::string theta_term(std::int64_t coef, int k, const Threshold& theta);

/// Distance between two vertices along a cycle given as a vertex sequence.
int ring_distance(const std::vector<Vertex>& cycle, Vertex x, Vertex y);

std::string seq_summary(const std::vector<Vertex>& seq);

}  // namespace gallai::detail
