// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The helmax authors

#include <catch2/catch_amalgamated.hpp>
