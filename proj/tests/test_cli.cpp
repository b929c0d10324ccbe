#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string kCli = TANGSCOPE_CLI_PATH;
const std::string kJsonl = std::string(TANGSCOPE_FIXTURE_DIR) + "/poems.jsonl";
const std::string kText = std::string(TANGSCOPE_FIXTURE_DIR) + "/poems.txt";
const std::string kPeople = std::string(TANGSCOPE_FIXTURE_DIR) + "/people.tsv";
const std::string kLexicons = std::string(TANGSCOPE_DATA_DIR) + "/lexicons";

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

std::string temp_path(const char* tag) {
    static int counter = 0;
    return "/tmp/tangscope_test_" + std::to_string(getpid()) + "_" + tag + "_" +
           std::to_string(counter++);
}

RunResult run(const std::string& args) {
    std::string out_path = temp_path("out");
    std::string err_path = temp_path("err");
    std::string command = kCli + " " + args + " >" + out_path + " 2>" + err_path;
    int status = std::system(command.c_str());
    RunResult result;
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return result;
}

std::string write_temp(const char* tag, const std::string& bytes) {
    std::string path = temp_path(tag);
    std::ofstream file(path, std::ios::binary);
    file << bytes;
    return path;
}

}  // namespace

TEST_CASE("stats reports corpus totals") {
    RunResult r = run("stats " + kJsonl);
    CHECK(r.code == 0);
    CHECK(r.out == "work_count\t12\nauthor_count\t8\nchar_count\t442\n");
    CHECK(r.err.empty());

    RunResult text = run("stats " + kText);
    CHECK(text.code == 0);
    CHECK(text.out == r.out);  // same corpus, plain-text framing

    RunResult json = run("stats --format json " + kJsonl);
    CHECK(json.code == 0);
    auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["work_count"] == 12);
    CHECK(doc["char_count"] == 442);
}

TEST_CASE("usage errors exit with 1 and print help") {
    RunResult bogus = run("bogus " + kJsonl);
    CHECK(bogus.code == 1);
    CHECK(bogus.err.find("Usage") != std::string::npos);

    CHECK(run("").code == 1);            // a subcommand is required
    CHECK(run("--help").code == 0);
    CHECK(run("stats --help").code == 0);
    CHECK(run("ngrams --n 0 " + kJsonl).code == 1);
    CHECK(run("affix --char 雲雲 " + kJsonl).code == 1);   // one character only
    CHECK(run("affix --char 雲 --len 9 " + kJsonl).code == 1);
    CHECK(run("colloc --word 白雲 --window 0 " + kJsonl).code == 1);
    CHECK(run("antithesis --pair 白髮 " + kJsonl).code == 1);   // missing comma
    CHECK(run("antithesis --pair 白髮,青 " + kJsonl).code == 1);  // unequal lengths
    CHECK(run("stats --format xml " + kJsonl).code == 1);
}

TEST_CASE("data errors exit with 2") {
    CHECK(run("stats /no/such/corpus.jsonl").code == 2);
    CHECK(run("network --gazetteer /no/such/people.tsv " + kJsonl).code == 2);

    std::string bad_json = write_temp("badjson", "{\"id\": \"x\"\n");
    CHECK(run("stats " + bad_json).code == 2);
    std::remove(bad_json.c_str());

    std::string bad_utf8 = write_temp("badutf8", "{\"id\":\"x\"}\n");
    {
        std::ofstream file(bad_utf8, std::ios::binary);
        file << "\xff\xfe broken\n";
    }
    CHECK(run("stats " + bad_utf8).code == 2);
    std::remove(bad_utf8.c_str());
}

TEST_CASE("repeated runs are byte identical") {
    std::string args = "colors --palette " + kLexicons + "/colors_extended.txt " + kJsonl;
    RunResult first = run(args);
    RunResult second = run(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK_FALSE(first.out.empty());
}

TEST_CASE("--out writes the same bytes as standard output") {
    std::string out_file = temp_path("outfile");
    RunResult direct = run("ngrams --n 2 --top 5 " + kJsonl);
    RunResult filed = run("ngrams --n 2 --top 5 --out " + out_file + " " + kJsonl);
    CHECK(direct.code == 0);
    CHECK(filed.code == 0);
    CHECK(filed.out.empty());
    CHECK(slurp(out_file) == direct.out);
    std::remove(out_file.c_str());
}

TEST_CASE("ngrams and affix tables") {
    RunResult top2 = run("ngrams --n 2 --top 2 " + kJsonl);
    CHECK(top2.code == 0);
    CHECK(top2.out == "明月\t7\n白雲\t6\n");

    RunResult suffix = run("affix --char 雲 " + kJsonl);
    CHECK(suffix.code == 0);
    CHECK(suffix.out == "白雲\t6\n暮雲\t1\n青雲\t1\n");

    RunResult by_author = run("ngrams --n 2 --top 1 --author 李白 " + kJsonl);
    CHECK(by_author.code == 0);
    CHECK(by_author.out == "明月\t2\n");
}

TEST_CASE("ratio and whitetable") {
    RunResult ratio =
        run("ratio --author 杜甫 --lexicon " + kLexicons + "/pessimistic.txt " + kJsonl);
    CHECK(ratio.code == 0);
    CHECK(ratio.out.find("percent\t50.00\n") != std::string::npos);
    CHECK(ratio.out.find("numerator\t1\n") != std::string::npos);
    CHECK(ratio.out.find("denominator\t2\n") != std::string::npos);

    std::string authors = write_temp("authors", "李白\n杜甫\n測試子\n");
    RunResult table = run("whitetable --authors " + authors + " --lexicon " + kLexicons +
                          "/white_words.txt --ratio-b " + kLexicons + "/pessimistic.txt " +
                          kJsonl);
    CHECK(table.code == 0);
    CHECK(table.out.find("freq\tword\t李白\t杜甫\t測試子\n") == 0);
    CHECK(table.out.find("\tRatio A\t") != std::string::npos);
    CHECK(table.out.find("\tRatio B\t") != std::string::npos);
    std::remove(authors.c_str());
}

TEST_CASE("collocations from the command line") {
    RunResult narrow = run("colloc --word 白雲 --window 3 " + kJsonl);
    CHECK(narrow.code == 0);
    CHECK(narrow.out.find("白雲\t明月\t5\n") != std::string::npos);

    RunResult per_poem = run("colloc --word 白雲 --window 3 --per-poem " + kJsonl);
    CHECK(per_poem.code == 0);
    CHECK(per_poem.out.find("白雲\t明月\t1\n") != std::string::npos);
}

TEST_CASE("couplets, colors, antithesis") {
    RunResult ww1 = run("couplets --poem ww1 " + kJsonl);
    CHECK(ww1.code == 0);
    CHECK(ww1.out ==
          "ww1\t3,4\tstructural\t白雲迴望合\t青靄入看無\n"
          "ww1\t5,6\tstructural\t分野中峰變\t陰晴眾壑殊\n");
    CHECK(run("couplets --poem nosuch " + kJsonl).code == 2);

    RunResult colors = run("colors --palette " + kLexicons + "/colors_basic.txt " + kJsonl);
    CHECK(colors.code == 0);
    CHECK(colors.out.substr(0, 4) == "白\t");
    CHECK(colors.out.find("青\t2") != std::string::npos);

    RunResult anti = run("antithesis --pair 白髮,青雲 " + kJsonl);
    CHECK(anti.code == 0);
    CHECK(anti.out == "syn4\t1,2\t0\theuristic\t白髮\t青雲\n");
    RunResult fullwidth = run("antithesis --pair 白髮，青雲 " + kJsonl);
    CHECK(fullwidth.out == anti.out);
}

TEST_CASE("network exports and edge lists") {
    std::string base = " --gazetteer " + kPeople + " " + kJsonl;

    RunResult dot = run("network" + base);
    CHECK(dot.code == 0);
    CHECK(dot.out.find("digraph mentions {") == 0);
    CHECK(dot.out.find("\"李白\" -> \"汪倫\" [weight=2];") != std::string::npos);

    RunResult graphml = run("network --format graphml" + base);
    CHECK(graphml.code == 0);
    CHECK(graphml.out.find("<graphml") != std::string::npos);

    RunResult csv = run("network --format csv" + base);
    CHECK(csv.code == 0);
    CHECK(csv.out.find("source,target,weight\n") == 0);

    RunResult edges = run("network --edges" + base);
    CHECK(edges.code == 0);
    CHECK(edges.out ==
          "李白\t汪倫\tlb2\ttitle\t汪倫\t-\n"
          "李白\t李白\tlb2\tbody\t李白\tself_loop\n"
          "李白\t汪倫\tlb2\tbody\t汪倫\t-\n"
          "杜甫\t李白\tdf2\ttitle\t李白\t-\n"
          "劉長卿\t賈誼\tlcq1\ttitle\t賈誼\tanachronistic\n"
          "測試子\t李白\tsyn2\tbody\t李白\t-\n"
          "測試子\t杜甫\tsyn2\tbody\t杜甫\t-\n"
          "測試子\t汪倫\tsyn2\tbody\t汪倫\t-\n"
          "測試子\t李白\tsyn2\tbody\t太白\tshort_form\n");

    RunResult edges_json = run("network --edges --format json" + base);
    CHECK(edges_json.code == 0);
    auto doc = nlohmann::json::parse(edges_json.out);
    CHECK(doc.size() == 9);
    CHECK(doc[1]["self_loop"] == true);
    CHECK(doc[8]["short_form"] == true);
}

TEST_CASE("verb contexts from the command line") {
    RunResult verbs = run("verbs --gazetteer " + kPeople + " " + kJsonl);
    CHECK(verbs.code == 0);
    CHECK(verbs.out ==
          "及\t汪倫\t1\n"
          "夢\t李白\t1\n"
          "憶\t李白\t1\n"
          "憶\t杜甫\t1\n"
          "見\t李白\t1\n"
          "賜\t汪倫\t1\n"
          "贈\t汪倫\t1\n"
          "過\t賈誼\t1\n");
}
