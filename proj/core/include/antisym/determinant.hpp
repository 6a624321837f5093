// Copyright 2026 The antisym Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>

namespace antisym {

/// Determinant of a row-major n x n matrix by LU with partial pivoting.
[[nodiscard]] double dense_determinant(std::span<const double> matrix, std::size_t n);

} // namespace antisym
