"""File formats: faces, manifests, models, and their failure messages."""

import json

import pytest

from conftest import make_face, standard_landmarks
from fuzzyface import (
    AlphaMode,
    BellKernel,
    CalibratedModel,
    CalibrationState,
    FaceFileError,
    TrapezoidKernel,
    face_to_dict,
    load_face,
    load_manifest,
    load_model,
    save_face,
    save_manifest,
    save_model,
)


class TestFaceFiles:
    def test_round_trip_exact(self, tmp_path):
        landmarks = standard_landmarks()
        landmarks["eye_left"] = (35.123456789012345, 40.98765432109876)
        face = make_face(landmarks=landmarks)
        path = tmp_path / "face.json"
        save_face(face, path)
        loaded = load_face(path)
        assert loaded == face
        save_face(loaded, tmp_path / "again.json")
        assert (tmp_path / "again.json").read_bytes() == path.read_bytes()

    def test_unknown_landmarks_preserved(self, tmp_path):
        landmarks = standard_landmarks()
        landmarks["dimple"] = (42.0, 61.5)
        face = make_face(landmarks=landmarks)
        path = tmp_path / "face.json"
        save_face(face, path)
        assert load_face(path).landmarks["dimple"] == (42.0, 61.5)

    def test_schema_shape(self, tmp_path):
        path = tmp_path / "face.json"
        save_face(make_face(), path)
        doc = json.loads(path.read_text())
        assert doc["version"] == 1
        assert set(doc) == {"version", "id", "image", "landmarks", "outline"}
        assert doc["image"] == {"width": 100, "height": 100}
        assert len(doc["landmarks"]) == 13

    def test_missing_landmark_named(self, tmp_path):
        doc = face_to_dict(make_face())
        del doc["landmarks"]["chin"]
        path = tmp_path / "face.json"
        path.write_text(json.dumps(doc))
        with pytest.raises(FaceFileError, match="chin"):
            load_face(path)

    def test_version_mismatch(self, tmp_path):
        doc = face_to_dict(make_face())
        doc["version"] = 2
        path = tmp_path / "face.json"
        path.write_text(json.dumps(doc))
        with pytest.raises(FaceFileError, match="version 2"):
            load_face(path)

    def test_unparsable_document(self, tmp_path):
        path = tmp_path / "face.json"
        path.write_text("{not json")
        with pytest.raises(FaceFileError, match="not valid JSON"):
            load_face(path)

    def test_malformed_polygon(self, tmp_path):
        doc = face_to_dict(make_face())
        doc["outline"] = [[10.0, 10.0], [90.0, 90.0]]
        path = tmp_path / "face.json"
        path.write_text(json.dumps(doc))
        with pytest.raises(FaceFileError, match="outline"):
            load_face(path)

    def test_missing_field(self, tmp_path):
        doc = face_to_dict(make_face())
        del doc["image"]
        path = tmp_path / "face.json"
        path.write_text(json.dumps(doc))
        with pytest.raises(FaceFileError, match="'image'"):
            load_face(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(FaceFileError, match="cannot read"):
            load_face(tmp_path / "absent.json")

    def test_no_temp_leftovers(self, tmp_path):
        save_face(make_face(), tmp_path / "face.json")
        assert [p.name for p in tmp_path.iterdir()] == ["face.json"]


class TestManifests:
    def test_round_trip_and_resolution(self, tmp_path):
        save_manifest(
            [("a.json", "b.json", "genuine"), ("a.json", "c.json", "impostor")],
            tmp_path / "manifest.json",
        )
        pairs = load_manifest(tmp_path / "manifest.json")
        assert len(pairs) == 2
        assert pairs[0].a == tmp_path / "a.json"
        assert pairs[0].label == "genuine"
        assert pairs[1].label == "impostor"

    def test_order_preserved(self, tmp_path):
        entries = [(f"{i}.json", f"{i+1}.json", "genuine") for i in range(10)]
        save_manifest(entries, tmp_path / "m.json")
        pairs = load_manifest(tmp_path / "m.json")
        assert [p.a.name for p in pairs] == [a for a, _, _ in entries]

    def test_bad_label(self, tmp_path):
        path = tmp_path / "m.json"
        path.write_text(json.dumps(
            {"version": 1, "pairs": [{"a": "x.json", "b": "y.json", "label": "match"}]}
        ))
        with pytest.raises(FaceFileError, match="label"):
            load_manifest(path)

    def test_missing_pair_field(self, tmp_path):
        path = tmp_path / "m.json"
        path.write_text(json.dumps({"version": 1, "pairs": [{"a": "x.json"}]}))
        with pytest.raises(FaceFileError, match="pair 0"):
            load_manifest(path)

    def test_version_check(self, tmp_path):
        path = tmp_path / "m.json"
        path.write_text(json.dumps({"version": 3, "pairs": []}))
        with pytest.raises(FaceFileError, match="version"):
            load_manifest(path)


class TestModels:
    def test_round_trip(self, tmp_path):
        state = CalibrationState(k1=0.9, k2=0.98, n=12, skipped=1)
        model = CalibratedModel.from_state(state, AlphaMode.LITERAL, TrapezoidKernel())
        path = tmp_path / "model.json"
        save_model(model, path)
        assert load_model(path) == model

    def test_schema_keys(self, tmp_path):
        model = CalibratedModel(
            k=0.97, k1=0.95, k2=0.99, n=4, skipped=0,
            alpha_mode=AlphaMode.COMPLEMENT, kernel=BellKernel(),
        )
        path = tmp_path / "model.json"
        save_model(model, path)
        doc = json.loads(path.read_text())
        assert set(doc) == {"k", "k1", "k2", "n", "skipped", "alpha_mode", "kernel"}
        assert doc["alpha_mode"] == "complement"

    def test_missing_key(self, tmp_path):
        path = tmp_path / "model.json"
        path.write_text(json.dumps({"k": 0.9}))
        with pytest.raises(FaceFileError, match="missing field"):
            load_model(path)

    def test_out_of_range_k(self, tmp_path):
        path = tmp_path / "model.json"
        path.write_text(json.dumps({
            "k": 1.4, "k1": 0.9, "k2": 0.99, "n": 1, "skipped": 0,
            "alpha_mode": "complement", "kernel": {"type": "bell", "r": 1.0},
        }))
        with pytest.raises(FaceFileError, match="'k'"):
            load_model(path)

    def test_bad_mode(self, tmp_path):
        path = tmp_path / "model.json"
        path.write_text(json.dumps({
            "k": 0.9, "k1": 0.9, "k2": 0.99, "n": 1, "skipped": 0,
            "alpha_mode": "jaccard", "kernel": {"type": "bell", "r": 1.0},
        }))
        with pytest.raises(FaceFileError):
            load_model(path)
