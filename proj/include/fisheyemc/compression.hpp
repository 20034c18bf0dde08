#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "fisheyemc/errors.hpp"

namespace fmc {

/// Byte accounting for externally produced bitstreams. Encoding itself is
/// out of scope; this record only measures.
struct CompressionRecord {
    std::string codec_label;
    std::optional<int> qp;  // 0..51 when present
    uint64_t raw_bytes = 0;
    uint64_t compressed_bytes = 0;
    double cr = 0.0;
};

/// cr = raw / compressed. Throws DomainError unless both counts are positive;
/// qp, when present, must be in [0, 51].
CompressionRecord make_compression_record(uint64_t raw_bytes, uint64_t compressed_bytes,
                                          const std::string& codec_label = "",
                                          std::optional<int> qp = std::nullopt);

}  // namespace fmc
