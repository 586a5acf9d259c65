#pragma once

#include <cstddef>

namespace beauville::embedded {

struct File {
    const char* name;
    const char* text;
};

extern const File groups[];
extern const std::size_t group_count;
extern const File tables[];
extern const std::size_t table_count;

}  // namespace beauville::embedded
