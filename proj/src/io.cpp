#include "acorr/io.hpp"

#include <zlib.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace acorr {

bool IstreamLineReader::next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

GzFileLineReader::GzFileLineReader(const std::string& path) : path_(path) {
    gzFile f = gzopen(path.c_str(), "rb");
    if (f == nullptr) {
        throw std::runtime_error("cannot open input file: " + path);
    }
    gzbuffer(f, 1 << 16);
    file_ = f;
}

GzFileLineReader::~GzFileLineReader() {
    if (file_ != nullptr) gzclose(static_cast<gzFile>(file_));
}

bool GzFileLineReader::fill() {
    if (eof_) return false;
    char chunk[1 << 15];
    const int got = gzread(static_cast<gzFile>(file_), chunk, sizeof(chunk));
    if (got < 0) {
        int errnum = 0;
        const char* msg = gzerror(static_cast<gzFile>(file_), &errnum);
        throw std::runtime_error("error reading " + path_ + ": " + (msg ? msg : "unknown"));
    }
    if (got == 0) {
        eof_ = true;
        return false;
    }
    buffer_.append(chunk, static_cast<size_t>(got));
    return true;
}

bool GzFileLineReader::next(std::string& line) {
    while (true) {
        const size_t nl = buffer_.find('\n', pos_);
        if (nl != std::string::npos) {
            line.assign(buffer_, pos_, nl - pos_);
            pos_ = nl + 1;
            if (pos_ > (1 << 20)) {
                buffer_.erase(0, pos_);
                pos_ = 0;
            }
            if (!line.empty() && line.back() == '\r') line.pop_back();
            return true;
        }
        if (!fill()) break;
    }
    if (pos_ < buffer_.size()) {  // final line without newline
        line.assign(buffer_, pos_, buffer_.size() - pos_);
        buffer_.clear();
        pos_ = 0;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return true;
    }
    return false;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path tmp = target.parent_path() / (target.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw std::runtime_error("cannot replace " + path + ": " + ec.message());
    }
}

}  // namespace acorr
