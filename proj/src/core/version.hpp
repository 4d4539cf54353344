/*
 * (C) Copyright 2026 rado developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

namespace rado {

inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace rado
