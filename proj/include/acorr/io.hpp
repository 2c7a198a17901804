#pragma once

#include <istream>
#include <memory>
#include <string>

namespace acorr {

/// Line-oriented input source. Implementations yield one line at a time with
/// the trailing newline (and any '\r') stripped.
class LineReader {
public:
    virtual ~LineReader() = default;
    virtual bool next(std::string& line) = 0;
};

class IstreamLineReader final : public LineReader {
public:
    explicit IstreamLineReader(std::istream& in) : in_(in) {}
    bool next(std::string& line) override;

private:
    std::istream& in_;
};

/// Reads a file through zlib's gz layer, which passes uncompressed files
/// through unchanged, so plain and .gz inputs share one code path.
class GzFileLineReader final : public LineReader {
public:
    /// Throws std::runtime_error if the file cannot be opened.
    explicit GzFileLineReader(const std::string& path);
    ~GzFileLineReader() override;
    GzFileLineReader(const GzFileLineReader&) = delete;
    GzFileLineReader& operator=(const GzFileLineReader&) = delete;

    bool next(std::string& line) override;

private:
    void* file_ = nullptr;  // gzFile
    std::string buffer_;
    size_t pos_ = 0;
    bool eof_ = false;
    std::string path_;

    bool fill();
};

/// Writes content to path atomically (temp file in the same directory, then rename).
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace acorr
