// Bit-exact persistence for ForestList: chunked text files with headers,
// integrity-checked reads, and k-way merge of sorted chunks.
#pragma once

#include <string>
#include <vector>

#include "burnlab/forest_list.hpp"

namespace burnlab {

enum class ListIoCode {
    Io,
    BadHeader,
    HeaderMismatch,
    BadRow,
    Unsorted,
    Duplicate,
    CountMismatch,
};

struct list_io_error : std::runtime_error {
    ListIoCode code;
    list_io_error(ListIoCode c, const std::string& msg)
        : std::runtime_error(msg), code(c) {}
};

struct ListFileHeader {
    int format_version = 1;
    int n = 0;
    int m = 0;
    ListKind kind = ListKind::Well;
    Order l1_min = 0;
    long long count = 0;
    int chunk_index = 1;  // 1-based
    int chunk_total = 1;
};

// Conventional stem for a list inside a lists directory.
std::string list_stem(const std::string& dir, int n, int m, ListKind kind,
                      Order l1_min);

// Emits <stem>.part<k>.bfl files of at most chunk_rows rows each; always at
// least one chunk, even for an empty list.  Returns the paths written.
std::vector<std::string> write_list(const ForestList& list, const std::string& stem,
                                    long long chunk_rows = 10'000'000);

bool list_exists(const std::string& stem);

// Reads all chunks back, verifying headers, counts, row canonicality,
// sortedness and dedup across the whole chunk sequence.
ForestList read_list(const std::string& stem);

// K-way merge of individually sorted chunk files into a new list file set at
// out_stem, deduplicating; memory is bounded by one row per input stream.
// Returns the number of merged rows.
long long merge_chunks(const std::vector<std::string>& inputs,
                       const std::string& out_stem);

}  // namespace burnlab
