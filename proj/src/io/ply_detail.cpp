#include "io/ply_detail.hpp"

#include <cstring>
#include <sstream>

namespace npr::ply {

size_t scalar_size(Scalar s) {
    switch (s) {
        case Scalar::I8:
        case Scalar::U8: return 1;
        case Scalar::I16:
        case Scalar::U16: return 2;
        case Scalar::I32:
        case Scalar::U32:
        case Scalar::F32: return 4;
        case Scalar::F64: return 8;
    }
    return 0;
}

void fail(std::istream& in, const std::string& message) {
    const auto pos = in.tellg();
    const long long offset = pos < 0 ? -1 : static_cast<long long>(pos);
    raise(ErrorCode::Parse, "ply: " + message + " (byte offset " + std::to_string(offset) + ")");
}

static Scalar scalar_from_name(std::istream& in, const std::string& word) {
    if (word == "char" || word == "int8") return Scalar::I8;
    if (word == "uchar" || word == "uint8") return Scalar::U8;
    if (word == "short" || word == "int16") return Scalar::I16;
    if (word == "ushort" || word == "uint16") return Scalar::U16;
    if (word == "int" || word == "int32") return Scalar::I32;
    if (word == "uint" || word == "uint32") return Scalar::U32;
    if (word == "float" || word == "float32") return Scalar::F32;
    if (word == "double" || word == "float64") return Scalar::F64;
    fail(in, "unknown scalar type '" + word + "'");
}

Header read_header(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) fail(in, "missing magic line");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "ply") fail(in, "not a PLY file (bad magic)");

    Header header;
    bool format_seen = false;
    bool done = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word == "comment" || word == "obj_info") continue;
        if (word == "format") {
            std::string fmt, version;
            ls >> fmt >> version;
            if (fmt == "ascii") header.binary = false;
            else if (fmt == "binary_little_endian") header.binary = true;
            else fail(in, "unsupported format '" + fmt + "'");
            format_seen = true;
        } else if (word == "element") {
            Element elem;
            if (!(ls >> elem.name >> elem.count)) fail(in, "malformed element line");
            header.elements.push_back(elem);
        } else if (word == "property") {
            if (header.elements.empty()) fail(in, "property before element");
            std::string t;
            if (!(ls >> t)) fail(in, "malformed property line");
            Property prop;
            if (t == "list") {
                std::string count_t, elem_t;
                if (!(ls >> count_t >> elem_t >> prop.name)) fail(in, "malformed list property");
                prop.is_list = true;
                prop.count_type = scalar_from_name(in, count_t);
                prop.type = scalar_from_name(in, elem_t);
            } else {
                prop.type = scalar_from_name(in, t);
                if (!(ls >> prop.name)) fail(in, "property missing name");
            }
            header.elements.back().properties.push_back(prop);
        } else if (word == "end_header") {
            done = true;
            break;
        } else {
            fail(in, "unexpected header keyword '" + word + "'");
        }
    }
    if (!done) fail(in, "missing end_header");
    if (!format_seen) fail(in, "missing format line");
    return header;
}

template <typename T>
static double read_raw(std::istream& in) {
    T value;
    char bytes[sizeof(T)];
    if (!in.read(bytes, sizeof(T))) fail(in, "unexpected end of file");
    std::memcpy(&value, bytes, sizeof(T));  // file and host are little-endian
    return static_cast<double>(value);
}

double read_scalar_binary(std::istream& in, Scalar type) {
    switch (type) {
        case Scalar::I8: return read_raw<int8_t>(in);
        case Scalar::U8: return read_raw<uint8_t>(in);
        case Scalar::I16: return read_raw<int16_t>(in);
        case Scalar::U16: return read_raw<uint16_t>(in);
        case Scalar::I32: return read_raw<int32_t>(in);
        case Scalar::U32: return read_raw<uint32_t>(in);
        case Scalar::F32: return read_raw<float>(in);
        case Scalar::F64: return read_raw<double>(in);
    }
    fail(in, "bad scalar type");
}

double read_scalar_ascii(std::istream& in, Scalar) {
    double v;
    if (!(in >> v)) fail(in, "unexpected end of ascii data");
    return v;
}

void skip_row_binary(std::istream& in, const Element& elem) {
    for (const Property& p : elem.properties) {
        if (p.is_list) {
            const auto n = static_cast<size_t>(read_scalar_binary(in, p.count_type));
            in.seekg(static_cast<std::streamoff>(n * scalar_size(p.type)), std::ios::cur);
            if (!in) fail(in, "unexpected end of file in list property");
        } else {
            in.seekg(static_cast<std::streamoff>(scalar_size(p.type)), std::ios::cur);
            if (!in) fail(in, "unexpected end of file");
        }
    }
}

template <typename T>
static void write_raw(std::ostream& out, T value) {
    char bytes[sizeof(T)];
    std::memcpy(bytes, &value, sizeof(T));
    out.write(bytes, sizeof(T));
}

void write_scalar_binary(std::ostream& out, Scalar type, double value) {
    switch (type) {
        case Scalar::I8: write_raw(out, static_cast<int8_t>(value)); return;
        case Scalar::U8: write_raw(out, static_cast<uint8_t>(value)); return;
        case Scalar::I16: write_raw(out, static_cast<int16_t>(value)); return;
        case Scalar::U16: write_raw(out, static_cast<uint16_t>(value)); return;
        case Scalar::I32: write_raw(out, static_cast<int32_t>(value)); return;
        case Scalar::U32: write_raw(out, static_cast<uint32_t>(value)); return;
        case Scalar::F32: write_raw(out, static_cast<float>(value)); return;
        case Scalar::F64: write_raw(out, value); return;
    }
}

}  // namespace npr::ply
