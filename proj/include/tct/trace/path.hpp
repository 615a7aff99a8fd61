// Copyright (C) 2026 the tct authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tct/common/hash.hpp"
#include "tct/vm/trace.hpp"

namespace tct::trace {

using PathHash = Hash32;

/// Canonical byte encoding of the control-flow projection of a trace (see
/// docs/formats.md). No data values are encoded; accounts appear only as
/// first-appearance ordinals. Throws IncompleteTrace unless the trace ends
/// in Revert or Complete.
std::vector<std::uint8_t> path_encoding(const vm::Trace& trace);

/// SHA-256 of path_encoding.
PathHash path_hash(const vm::Trace& trace);

/// Human-readable trace, one event per line, including data (addresses,
/// map keys) that the hash leaves out.
std::string dump_trace(const vm::Trace& trace);

}  // namespace tct::trace
