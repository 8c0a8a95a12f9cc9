#pragma once

#include <cstdint>
#include <cstdio>
#include <cmath>
#include <string>
#include <vector>

namespace gnpx {

// Minimal streaming JSON writer. Exists because output must be byte-stable:
// every double is serialized with %.17g, enough digits to round-trip exactly.
class JsonWriter {
public:
    std::string take() { return std::move(out_); }
    const std::string& str() const { return out_; }

    JsonWriter& begin_object() { open('{'); return *this; }
    JsonWriter& end_object() { close('}'); return *this; }
    JsonWriter& begin_array() { open('['); return *this; }
    JsonWriter& end_array() { close(']'); return *this; }

    JsonWriter& key(const char* name) {
        comma();
        append_string(name);
        out_ += ':';
        pending_value_ = true;
        return *this;
    }

    JsonWriter& value(double v) { comma(); append_double(v); return *this; }
    JsonWriter& value(std::int64_t v) { comma(); out_ += std::to_string(v); return *this; }
    JsonWriter& value(std::uint64_t v) { comma(); out_ += std::to_string(v); return *this; }
    JsonWriter& value(std::uint32_t v) { comma(); out_ += std::to_string(v); return *this; }
    JsonWriter& value(bool v) { comma(); out_ += v ? "true" : "false"; return *this; }
    JsonWriter& value(const char* v) { comma(); append_string(v); return *this; }
    JsonWriter& value(const std::string& v) { comma(); append_string(v.c_str()); return *this; }
    JsonWriter& null() { comma(); out_ += "null"; return *this; }

private:
    void open(char c) {
        comma();
        out_ += c;
        depth_first_.push_back(true);
    }

    void close(char c) {
        out_ += c;
        depth_first_.pop_back();
    }

    void comma() {
        if (pending_value_) {
            pending_value_ = false;
            return;
        }
        if (!depth_first_.empty()) {
            if (depth_first_.back()) depth_first_.back() = false;
            else out_ += ',';
        }
    }

    void append_double(double v) {
        if (std::isnan(v)) { out_ += "null"; return; }
        if (std::isinf(v)) { out_ += v > 0 ? "1e999" : "-1e999"; return; }
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out_ += buf;
    }

    void append_string(const char* s) {
        out_ += '"';
        for (; *s; ++s) {
            switch (*s) {
                case '"': out_ += "\\\""; break;
                case '\\': out_ += "\\\\"; break;
                case '\n': out_ += "\\n"; break;
                case '\t': out_ += "\\t"; break;
                default: out_ += *s;
            }
        }
        out_ += '"';
    }

    std::string out_;
    std::vector<bool> depth_first_;
    bool pending_value_ = false;
};

// %.17g as a string; shared by the CSV emitters
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace gnpx
