/*
 * Copyright 2026 the fairgen authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <string>
#include <vector>

#include "doctest.h"
#include "fairgen/core/errors.hpp"
#include "fairgen/core/manifest.hpp"
#include "fairgen/core/types.hpp"
#include "test_util.hpp"

using namespace fairgen;
using testutil::TempDir;
using testutil::write_file;

TEST_CASE("class partition basics") {
  ClassPartition p({"cat", "dog", "bird"});
  CHECK(p.size() == 3);
  CHECK(p.name(1) == "dog");
  CHECK(p.index_of("bird") == 2);
  CHECK_THROWS_AS(p.index_of("fish"), UnknownClass);
  CHECK(p == ClassPartition({"cat", "dog", "bird"}));
  CHECK(p != ClassPartition({"dog", "cat", "bird"}));
}

TEST_CASE("class partition rejects bad label sets") {
  CHECK_THROWS_AS(ClassPartition({"solo"}), InvalidK);
  CHECK_THROWS_AS(ClassPartition(std::vector<std::string>{}), InvalidK);
  CHECK_THROWS_AS(ClassPartition({"a", "a"}), MalformedManifest);
  CHECK_THROWS_AS(ClassPartition({"a", ""}), MalformedManifest);
}

TEST_CASE("discrete distribution validation") {
  DiscreteDistribution d({0.5, 0.25, 0.25});
  CHECK(d.size() == 3);
  CHECK(d[0] == 0.5);
  CHECK_THROWS_AS(DiscreteDistribution({0.5, 0.4}), InvalidDistribution);
  CHECK_THROWS_AS(DiscreteDistribution({1.5, -0.5}), InvalidDistribution);
  CHECK_THROWS_AS(DiscreteDistribution(std::vector<double>{}),
                  InvalidDistribution);
  CHECK_THROWS_AS(DiscreteDistribution({0.5, 0.5 + 1e-7}),
                  InvalidDistribution);
}

TEST_CASE("uniform distribution invariants") {
  for (std::size_t k : {2ul, 3ul, 7ul, 100ul, 10000ul}) {
    auto u = uniform_distribution(k);
    REQUIRE(u.size() == k);
    for (std::size_t j = 0; j < k; ++j) CHECK(u[j] == 1.0 / double(k));
  }
  CHECK_THROWS_AS(uniform_distribution(1), InvalidK);
  CHECK_THROWS_AS(uniform_distribution(0), InvalidK);
}

TEST_CASE("eval manifest round trip preserves every field") {
  TempDir dir;
  ClassPartition partition({"cat", "dog"});
  EvalSet set;
  set.partition = partition;
  set.name = "fixture";
  EvalRecord r1;
  r1.sample_id = "s1";
  r1.true_class = 0;
  r1.recon_class = 1;
  r1.scalars["lpips"] = 0.1;
  r1.scalars["niqe"] = 1.0 / 3.0;
  r1.true_embedding = std::vector<double>{0.1, 0.2, 0.3};
  r1.recon_embedding = std::vector<double>{1.0, 0.0, -0.25};
  EvalRecord r2;
  r2.sample_id = "s2";
  r2.true_class = 1;
  r2.recon_class = 1;
  r2.scalars["lpips"] = 1e-17;
  set.records = {r1, r2};

  const auto csv = dir.file("set.csv");
  const auto emb = dir.file("set.jsonl");
  save_eval_manifest(set, csv, emb);

  EvalLoadOptions opts;
  opts.embeddings_path = emb;
  auto loaded = load_eval_manifest(csv, partition, opts);
  REQUIRE(loaded.size() == 2);
  CHECK(loaded.name == "set");
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& a = set.records[i];
    const auto& b = loaded.records[i];
    CHECK(a.sample_id == b.sample_id);
    CHECK(a.true_class == b.true_class);
    CHECK(a.recon_class == b.recon_class);
    CHECK(a.scalars == b.scalars);  // exact doubles through the text form
  }
  REQUIRE(loaded.records[0].true_embedding.has_value());
  CHECK(*loaded.records[0].true_embedding == *r1.true_embedding);
  CHECK(*loaded.records[0].recon_embedding == *r1.recon_embedding);
  CHECK_FALSE(loaded.records[1].true_embedding.has_value());
}

TEST_CASE("eval manifest loader diagnostics") {
  TempDir dir;
  ClassPartition partition({"a", "b"});
  const auto path = dir.file("m.csv");

  SUBCASE("missing file") {
    CHECK_THROWS_AS(load_eval_manifest(dir.file("nope.csv"), partition),
                    IoError);
  }
  SUBCASE("bad header") {
    write_file(path, "sample,true,recon\nx,a,b\n");
    CHECK_THROWS_AS(load_eval_manifest(path, partition), MalformedManifest);
  }
  SUBCASE("unknown class cites the line") {
    write_file(path,
               "sample_id,true_class,recon_class\ns1,a,b\ns2,q,a\n");
    try {
      load_eval_manifest(path, partition);
      FAIL("expected UnknownClass");
    } catch (const UnknownClass& e) {
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }
  SUBCASE("duplicate sample id") {
    write_file(path,
               "sample_id,true_class,recon_class\ns1,a,b\ns1,b,a\n");
    CHECK_THROWS_AS(load_eval_manifest(path, partition), DuplicateSample);
  }
  SUBCASE("wrong field count cites the line") {
    write_file(path, "sample_id,true_class,recon_class\ns1,a\n");
    try {
      load_eval_manifest(path, partition);
      FAIL("expected MalformedManifest");
    } catch (const MalformedManifest& e) {
      CHECK(e.line == 2);
    }
  }
  SUBCASE("non-numeric scalar") {
    write_file(path,
               "sample_id,true_class,recon_class,scalar:lpips\ns1,a,b,zz\n");
    CHECK_THROWS_AS(load_eval_manifest(path, partition), MalformedManifest);
  }
  SUBCASE("duplicate scalar column") {
    write_file(path,
               "sample_id,true_class,recon_class,scalar:x,scalar:x\n");
    CHECK_THROWS_AS(load_eval_manifest(path, partition), MalformedManifest);
  }
}

TEST_CASE("first_per_class keeps the leading records per true class") {
  TempDir dir;
  ClassPartition partition({"a", "b"});
  const auto path = dir.file("m.csv");
  write_file(path,
             "sample_id,true_class,recon_class\n"
             "s1,a,a\ns2,b,a\ns3,a,b\ns4,a,a\ns5,b,b\ns6,b,a\n");
  EvalLoadOptions opts;
  opts.first_per_class = 2;
  auto set = load_eval_manifest(path, partition, opts);
  REQUIRE(set.size() == 4);
  CHECK(set.records[0].sample_id == "s1");
  CHECK(set.records[1].sample_id == "s2");
  CHECK(set.records[2].sample_id == "s3");
  CHECK(set.records[3].sample_id == "s5");
}

TEST_CASE("embedding sidecar diagnostics") {
  TempDir dir;
  ClassPartition partition({"a", "b"});
  const auto csv = dir.file("m.csv");
  write_file(csv, "sample_id,true_class,recon_class\ns1,a,b\n");
  const auto emb = dir.file("e.jsonl");
  EvalLoadOptions opts;
  opts.embeddings_path = emb;

  SUBCASE("unknown sample id") {
    write_file(emb,
               "{\"sample_id\":\"zz\",\"true\":[1,0],\"recon\":[0,1]}\n");
    CHECK_THROWS_AS(load_eval_manifest(csv, partition, opts),
                    MalformedManifest);
  }
  SUBCASE("duplicate sidecar entry") {
    write_file(emb,
               "{\"sample_id\":\"s1\",\"true\":[1,0],\"recon\":[0,1]}\n"
               "{\"sample_id\":\"s1\",\"true\":[1,0],\"recon\":[0,1]}\n");
    CHECK_THROWS_AS(load_eval_manifest(csv, partition, opts),
                    DuplicateSample);
  }
  SUBCASE("embedding dimension mismatch") {
    write_file(emb,
               "{\"sample_id\":\"s1\",\"true\":[1,0,0],\"recon\":[0,1]}\n");
    CHECK_THROWS_AS(load_eval_manifest(csv, partition, opts),
                    DimensionMismatch);
  }
}

TEST_CASE("diversity manifest grouping and round trip") {
  TempDir dir;
  ClassPartition partition({"a", "b", "c"});
  const auto path = dir.file("d.csv");
  write_file(path,
             "condition_id,replicate,recon_class\n"
             "c1,0,a\nc2,0,b\nc1,1,c\nc1,2,a\nc2,1,b\n");
  auto dset = load_diversity_manifest(path, partition);
  REQUIRE(dset.size() == 2);
  CHECK(dset.conditions[0].condition_id == "c1");
  CHECK(dset.conditions[0].recon_classes == std::vector<std::size_t>{0, 2, 0});
  CHECK(dset.conditions[1].recon_classes == std::vector<std::size_t>{1, 1});
  CHECK(dset.uneven_replicates);
  CHECK(dset.total_replicates() == 5);
  CHECK(dset.counts_for(0) == std::vector<std::size_t>{2, 0, 1});

  const auto out = dir.file("d2.csv");
  save_diversity_manifest(dset, out);
  auto again = load_diversity_manifest(out, partition);
  REQUIRE(again.size() == dset.size());
  for (std::size_t m = 0; m < dset.size(); ++m) {
    CHECK(again.conditions[m].condition_id == dset.conditions[m].condition_id);
    CHECK(again.conditions[m].recon_classes ==
          dset.conditions[m].recon_classes);
  }
}

TEST_CASE("diversity manifest negatives") {
  TempDir dir;
  ClassPartition partition({"a", "b"});
  const auto path = dir.file("d.csv");
  SUBCASE("header only") {
    write_file(path, "condition_id,replicate,recon_class\n");
    CHECK_THROWS_AS(load_diversity_manifest(path, partition), EmptyCondition);
  }
  SUBCASE("bad header") {
    write_file(path, "cond,rep,class\nc1,0,a\n");
    CHECK_THROWS_AS(load_diversity_manifest(path, partition),
                    MalformedManifest);
  }
  SUBCASE("unknown class") {
    write_file(path, "condition_id,replicate,recon_class\nc1,0,zz\n");
    CHECK_THROWS_AS(load_diversity_manifest(path, partition), UnknownClass);
  }
}

TEST_CASE("labeled index and target loaders") {
  TempDir dir;
  ClassPartition partition({"A", "B"});
  const auto idx = dir.file("i.csv");
  write_file(idx, "sample_id,class\nx1,A\nx2,B\nx3,A\n");
  auto index = load_labeled_index(idx, partition);
  REQUIRE(index.size() == 3);
  CHECK(index.classes == std::vector<std::size_t>{0, 1, 0});
  CHECK(index.class_counts() == std::vector<std::size_t>{2, 1});

  write_file(idx, "sample_id,class\nx1,A\nx1,B\n");
  CHECK_THROWS_AS(load_labeled_index(idx, partition), DuplicateSample);

  const auto tgt = dir.file("t.csv");
  write_file(tgt, "class,probability\nB,0.25\nA,0.75\n");
  auto target = load_target_distribution(tgt, partition);
  CHECK(target[0] == 0.75);
  CHECK(target[1] == 0.25);

  write_file(tgt, "class,probability\nA,1\n");  // absent class gets 0
  auto point = load_target_distribution(tgt, partition);
  CHECK(point[0] == 1.0);
  CHECK(point[1] == 0.0);

  write_file(tgt, "class,probability\nA,0.5\nA,0.5\n");
  CHECK_THROWS_AS(load_target_distribution(tgt, partition),
                  MalformedManifest);
  write_file(tgt, "class,probability\nA,0.5\nB,0.25\n");
  CHECK_THROWS_AS(load_target_distribution(tgt, partition),
                  InvalidDistribution);
}

TEST_CASE("subset files are newline separated ids") {
  TempDir dir;
  const auto path = dir.file("s.txt");
  std::vector<std::string> ids = {"a", "b", "c"};
  save_subset(ids, path);
  CHECK(load_subset(path) == ids);
}

TEST_CASE("partition inference follows first appearance") {
  TempDir dir;
  const auto path = dir.file("m.csv");
  write_file(path,
             "sample_id,true_class,recon_class\ns1,dog,cat\ns2,bird,dog\n");
  auto p = infer_eval_partition(path);
  CHECK(p.names() == std::vector<std::string>{"dog", "cat", "bird"});

  const auto div = dir.file("d.csv");
  write_file(div, "condition_id,replicate,recon_class\nc1,0,x\nc1,1,y\n");
  CHECK(infer_diversity_partition(div).names() ==
        std::vector<std::string>{"x", "y"});

  const auto idx = dir.file("i.csv");
  write_file(idx, "sample_id,class\nx1,B\nx2,A\nx3,B\n");
  CHECK(infer_index_partition(idx).names() ==
        std::vector<std::string>{"B", "A"});
}

TEST_CASE("eval set count helpers") {
  ClassPartition partition({"a", "b"});
  EvalSet set;
  set.partition = partition;
  auto add = [&](std::size_t t, std::size_t r) {
    EvalRecord rec;
    rec.sample_id = "s" + std::to_string(set.records.size());
    rec.true_class = t;
    rec.recon_class = r;
    set.records.push_back(rec);
  };
  add(0, 0);
  add(0, 1);
  add(0, 1);
  add(1, 1);
  CHECK(set.class_counts() == std::vector<std::size_t>{3, 1});
  CHECK(set.correct_counts() == std::vector<std::size_t>{1, 1});
  CHECK(set.recon_counts() == std::vector<std::size_t>{1, 3});
}
