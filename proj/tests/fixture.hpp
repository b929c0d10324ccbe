#pragma once

#include "tangscope/corpus.hpp"
#include "tangscope/socialnet.hpp"

#include <string>
#include <vector>

namespace fixture {

inline std::string dir() { return TANGSCOPE_FIXTURE_DIR; }
inline std::string data_dir() { return TANGSCOPE_DATA_DIR; }

inline std::string poems_jsonl() { return dir() + "/poems.jsonl"; }
inline std::string poems_text() { return dir() + "/poems.txt"; }
inline std::string people_tsv() { return dir() + "/people.tsv"; }

inline const std::vector<tangscope::Poem>& poems() {
    static const std::vector<tangscope::Poem> loaded = tangscope::load_corpus(poems_jsonl());
    return loaded;
}

inline const tangscope::Gazetteer& people() {
    static const tangscope::Gazetteer loaded = tangscope::load_gazetteer(people_tsv());
    return loaded;
}

inline const tangscope::Poem& poem(const std::string& id) {
    for (const tangscope::Poem& p : poems())
        if (p.id == id) return p;
    throw std::runtime_error("fixture poem missing: " + id);
}

}  // namespace fixture
