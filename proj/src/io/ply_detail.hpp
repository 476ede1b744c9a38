#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "util/error.hpp"

namespace npr::ply {

enum class Scalar { I8, U8, I16, U16, I32, U32, F32, F64 };

size_t scalar_size(Scalar s);
Scalar parse_scalar(const std::string& name, std::istream& in);

struct Property {
    std::string name;
    Scalar type = Scalar::F32;
    bool is_list = false;
    Scalar count_type = Scalar::U8;
};

struct Element {
    std::string name;
    size_t count = 0;
    std::vector<Property> properties;

    int find(const std::string& prop) const {
        for (size_t i = 0; i < properties.size(); ++i)
            if (properties[i].name == prop) return static_cast<int>(i);
        return -1;
    }
};

struct Header {
    bool binary = false;
    std::vector<Element> elements;

    const Element* find(const std::string& name) const {
        for (const auto& e : elements)
            if (e.name == name) return &e;
        return nullptr;
    }
};

[[noreturn]] void fail(std::istream& in, const std::string& message);

Header read_header(std::istream& in);

/// Reads one scalar of the given type and returns it widened to double.
double read_scalar_binary(std::istream& in, Scalar type);
double read_scalar_ascii(std::istream& in, Scalar type);

/// Reads a full element row into `values` (flattened; list properties expand
/// to count followed by entries). Only fixed layouts used by this project are
/// supported for binary list rows.
void skip_row_binary(std::istream& in, const Element& elem);

void write_scalar_binary(std::ostream& out, Scalar type, double value);

}  // namespace npr::ply
