#include "burnlab/list_store.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

namespace burnlab {

namespace {

constexpr const char* kMagic = "#burnlab-list v1";

std::string chunk_path(const std::string& stem, int k) {
    return stem + ".part" + std::to_string(k) + ".bfl";
}

std::string header_line(const ListFileHeader& h) {
    std::ostringstream out;
    out << "n=" << h.n << " m=" << h.m << " kind=" << kind_name(h.kind)
        << " l1min=" << h.l1_min << " count=" << h.count << " chunk="
        << h.chunk_index << "/" << h.chunk_total;
    return out.str();
}

ListFileHeader parse_header(const std::string& magic, const std::string& line,
                            const std::string& path) {
    if (magic != kMagic)
        throw list_io_error(ListIoCode::BadHeader, path + ": bad magic line");
    ListFileHeader h;
    std::istringstream in(line);
    std::string field;
    char kindbuf[32] = {0};
    int got = 0;
    while (in >> field) {
        long long v;
        if (std::sscanf(field.c_str(), "n=%lld", &v) == 1) { h.n = (int)v; ++got; }
        else if (std::sscanf(field.c_str(), "m=%lld", &v) == 1) { h.m = (int)v; ++got; }
        else if (std::sscanf(field.c_str(), "kind=%31s", kindbuf) == 1) {
            h.kind = kind_from_name(kindbuf);
            ++got;
        } else if (std::sscanf(field.c_str(), "l1min=%lld", &v) == 1) { h.l1_min = v; ++got; }
        else if (std::sscanf(field.c_str(), "count=%lld", &v) == 1) { h.count = v; ++got; }
        else if (int ci, ct; std::sscanf(field.c_str(), "chunk=%d/%d", &ci, &ct) == 2) {
            h.chunk_index = ci;
            h.chunk_total = ct;
            ++got;
        } else {
            throw list_io_error(ListIoCode::BadHeader,
                                path + ": unknown header field " + field);
        }
    }
    if (got != 6)
        throw list_io_error(ListIoCode::BadHeader, path + ": incomplete header");
    return h;
}

}  // namespace

std::string list_stem(const std::string& dir, int n, int m, ListKind kind,
                      Order l1_min) {
    std::ostringstream out;
    out << dir << "/n" << n << "m" << m << "-" << kind_name(kind);
    if (l1_min > 0) out << "-l" << l1_min;
    return out.str();
}

std::vector<std::string> write_list(const ForestList& list, const std::string& stem,
                                    long long chunk_rows) {
    if (chunk_rows < 1) throw validation_error("write_list: chunk_rows must be positive");
    const long long total = static_cast<long long>(list.items.size());
    const int chunks = total == 0
                           ? 1
                           : static_cast<int>((total + chunk_rows - 1) / chunk_rows);
    std::vector<std::string> paths;
    long long row = 0;
    for (int k = 1; k <= chunks; ++k) {
        const long long here = std::min<long long>(chunk_rows, total - row);
        ListFileHeader h{1, list.n, list.m, list.kind, list.l1_min, here, k, chunks};
        const std::string path = chunk_path(stem, k);
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw list_io_error(ListIoCode::Io, "cannot open " + path + " for writing");
        out << kMagic << "\n" << header_line(h) << "\n";
        for (long long i = 0; i < here; ++i, ++row)
            out << list.items[static_cast<std::size_t>(row)].str() << "\n";
        if (!out)
            throw list_io_error(ListIoCode::Io, "write failed on " + path);
        paths.push_back(path);
    }
    return paths;
}

bool list_exists(const std::string& stem) {
    return std::filesystem::exists(chunk_path(stem, 1));
}

ForestList read_list(const std::string& stem) {
    ForestList out;
    int chunk_total = 1;
    std::optional<PathForest> prev;
    for (int k = 1; k <= chunk_total; ++k) {
        const std::string path = chunk_path(stem, k);
        std::ifstream in(path, std::ios::binary);
        if (!in) throw list_io_error(ListIoCode::Io, "cannot open " + path);
        std::string magic, line;
        if (!std::getline(in, magic) || !std::getline(in, line))
            throw list_io_error(ListIoCode::BadHeader, path + ": truncated header");
        ListFileHeader h = parse_header(magic, line, path);
        if (h.chunk_index != k)
            throw list_io_error(ListIoCode::HeaderMismatch,
                                path + ": unexpected chunk index");
        if (k == 1) {
            out.n = h.n;
            out.m = h.m;
            out.kind = h.kind;
            out.l1_min = h.l1_min;
            chunk_total = h.chunk_total;
        } else if (h.n != out.n || h.m != out.m || h.kind != out.kind ||
                   h.l1_min != out.l1_min || h.chunk_total != chunk_total) {
            throw list_io_error(ListIoCode::HeaderMismatch,
                                path + ": header disagrees with chunk 1");
        }
        long long rows = 0;
        while (std::getline(in, line)) {
            if (line.empty())
                throw list_io_error(ListIoCode::BadRow, path + ": empty row");
            PathForest t = [&] {
                try {
                    return PathForest::parse(line);
                } catch (const validation_error& e) {
                    throw list_io_error(ListIoCode::BadRow, path + ": " + e.what());
                }
            }();
            if (t.str() != line)
                throw list_io_error(ListIoCode::BadRow,
                                    path + ": row not canonical: " + line);
            if (t.n() != out.n)
                throw list_io_error(ListIoCode::BadRow,
                                    path + ": row has wrong path count: " + line);
            if (prev) {
                if (*prev == t)
                    throw list_io_error(ListIoCode::Duplicate,
                                        path + ": duplicate row: " + line);
                if (t < *prev)
                    throw list_io_error(ListIoCode::Unsorted,
                                        path + ": unsorted row: " + line);
            }
            prev = t;
            out.items.push_back(std::move(t));
            ++rows;
        }
        if (rows != h.count)
            throw list_io_error(ListIoCode::CountMismatch,
                                path + ": header count " + std::to_string(h.count) +
                                    " but " + std::to_string(rows) + " rows");
    }
    return out;
}

long long merge_chunks(const std::vector<std::string>& inputs,
                       const std::string& out_stem) {
    struct Stream {
        std::ifstream in;
        std::string path;
        std::optional<PathForest> head;
        bool next() {
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                PathForest t = PathForest::parse(line);
                if (head && t < *head)
                    throw list_io_error(ListIoCode::Unsorted,
                                        path + ": unsorted row: " + line);
                head = std::move(t);
                return true;
            }
            head.reset();
            return false;
        }
    };

    std::vector<Stream> streams(inputs.size());
    ListFileHeader meta;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        auto& s = streams[i];
        s.path = inputs[i];
        s.in.open(inputs[i], std::ios::binary);
        if (!s.in) throw list_io_error(ListIoCode::Io, "cannot open " + inputs[i]);
        std::string magic, line;
        if (!std::getline(s.in, magic) || !std::getline(s.in, line))
            throw list_io_error(ListIoCode::BadHeader, inputs[i] + ": truncated header");
        ListFileHeader h = parse_header(magic, line, inputs[i]);
        if (i == 0)
            meta = h;
        else if (h.n != meta.n || h.m != meta.m || h.kind != meta.kind)
            throw list_io_error(ListIoCode::HeaderMismatch,
                                inputs[i] + ": inputs disagree on (n, m, kind)");
        meta.l1_min = std::min(meta.l1_min, h.l1_min);
        s.next();
    }

    const std::string body_path = out_stem + ".merge.tmp";
    std::ofstream body(body_path, std::ios::binary);
    if (!body) throw list_io_error(ListIoCode::Io, "cannot open " + body_path);
    long long count = 0;
    std::optional<PathForest> last;
    for (;;) {
        Stream* best = nullptr;
        for (auto& s : streams)
            if (s.head && (!best || *s.head < *best->head)) best = &s;
        if (!best) break;
        if (!last || *last < *best->head) {
            body << best->head->str() << "\n";
            last = *best->head;
            ++count;
        }
        best->next();
    }
    body.close();

    ListFileHeader h{1, meta.n, meta.m, meta.kind, meta.l1_min, count, 1, 1};
    const std::string out_path = chunk_path(out_stem, 1);
    {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw list_io_error(ListIoCode::Io, "cannot open " + out_path);
        out << kMagic << "\n" << header_line(h) << "\n";
        std::ifstream in(body_path, std::ios::binary);
        out << in.rdbuf();
        if (!out) throw list_io_error(ListIoCode::Io, "write failed on " + out_path);
    }
    std::filesystem::remove(body_path);
    return count;
}

}  // namespace burnlab
