"""End-to-end blinded confusion study against an in-process server.

Builds study media from phantom renders (clean frames as "original",
desk-model translations would be the "synthetic" side in production; here a
blurred clean render stands in), runs a scripted rater over the HTTP API,
exports the un-blinded responses, and aggregates them into metric tables.
"""

import json
import tempfile
from pathlib import Path

import numpy as np
from fastapi.testclient import TestClient
from PIL import Image
from scipy import ndimage

from echosynth import evaluation, phantom
from echosynth.study_server import StudyStore, create_app


def build_media(media_root, n_each=6):
    items = []
    for i in range(n_each):
        config = phantom.PhantomConfig(seed=600 + i, num_frames=3, image_size=96,
                                       cycle_period=3)
        clean = phantom.generate_phantom_pair(config).clean.pixels[1]
        synthetic = ndimage.gaussian_filter(clean, 1.2)  # stand-in synthesis
        for tag, img in (("original", clean), ("synthetic", synthetic)):
            name = f"{tag}_{i}.png"
            Image.fromarray((img * 255).astype(np.uint8)).save(media_root / name)
            items.append({"media": name, "provenance": tag})
    return items


def main():
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        media = tmp / "media"
        media.mkdir()
        items = build_media(media)

        store = StudyStore(tmp / "journal.jsonl", media)
        client = TestClient(create_app(store))

        study_id = client.post("/studies", json={
            "study_type": "confusion", "items": items, "seed": 5,
        }).json()["study_id"]
        print(f"created confusion study {study_id} with {len(items)} items")

        session = client.post(f"/studies/{study_id}/sessions",
                              json={"rater_id": "demo-rater"}).json()["session_id"]

        # Scripted rater: blurred fakes are softer, so call anything with a
        # low high-frequency energy "synthetic".
        answered = 0
        while True:
            payload = client.get(f"/sessions/{session}/next").json()
            if payload.get("done"):
                break
            image_bytes = client.get(payload["media"]["image"]).content
            from io import BytesIO
            img = np.asarray(Image.open(BytesIO(image_bytes)), dtype=np.float64) / 255.0
            sharpness = np.abs(img - ndimage.uniform_filter(img, 3)).mean()
            choice = "synthetic" if sharpness < 0.011 else "original"
            client.post(f"/sessions/{session}/responses",
                        json={"item_id": payload["item_id"], "choice": choice})
            answered += 1
        print(f"scripted rater answered {answered} items")

        export = client.get(f"/studies/{study_id}/export").text
        records = [json.loads(line) for line in export.strip().splitlines()]
        meta, responses = records[0], records[1:]
        print(f"export complete={meta['complete']} responses={meta['n_responses']}")

        truth = [1 if r["provenance"] == "synthetic" else 0 for r in responses]
        pred = [1 if r["choice"] == "synthetic" else 0 for r in responses]
        cm = evaluation.build_confusion_matrix(truth, pred)
        print(f"\nconfusion cells: tp={cm.tp} fp={cm.fp} fn={cm.fn} tn={cm.tn}")
        print(evaluation.render_metrics_table(evaluation.compute_metrics(cm)))


if __name__ == "__main__":
    main()
