#include "fisheyemc/compression.hpp"

namespace fmc {

CompressionRecord make_compression_record(uint64_t raw_bytes, uint64_t compressed_bytes,
                                          const std::string& codec_label,
                                          std::optional<int> qp) {
    if (raw_bytes == 0 || compressed_bytes == 0) {
        throw DomainError("compression ratio: byte counts must be positive");
    }
    if (qp && (*qp < 0 || *qp > 51)) {
        throw DomainError("compression ratio: qp must be in [0, 51]");
    }
    CompressionRecord rec;
    rec.codec_label = codec_label;
    rec.qp = qp;
    rec.raw_bytes = raw_bytes;
    rec.compressed_bytes = compressed_bytes;
    rec.cr = static_cast<double>(raw_bytes) / static_cast<double>(compressed_bytes);
    return rec;
}

}  // namespace fmc
