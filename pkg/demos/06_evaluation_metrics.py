"""Confusion matrices, per-class IoU, and mIoU aggregation.

Run:  python3 demos/06_evaluation_metrics.py
"""

import numpy as np

from uda_forge.evaluation import accumulate, iou_per_class, miou, new_confusion_matrix

print("== from pixels to a confusion matrix ==")
gt = np.array([[0, 0, 1, 1, 2, 255]])
pred = np.array([[0, 1, 1, 1, 2, 2]])
cm = accumulate(new_confusion_matrix(3), pred, gt)
print(f"gt   {gt.tolist()[0]}  (255 = ignore)")
print(f"pred {pred.tolist()[0]}")
print(f"confusion matrix (rows = truth):\n{cm}")

iou, present = iou_per_class(cm)
print(f"\nper-class IoU: {np.round(iou, 3)}  present: {present.tolist()}")
print(f"mIoU: {miou(iou, present):.4f}")

print("\n== absent classes are excluded from the mean ==")
cm = np.zeros((3, 3), dtype=np.int64)
cm[0, 0], cm[1, 1] = 10, 10
iou, present = iou_per_class(cm)
print(f"two perfect classes, one absent -> mIoU {miou(iou, present)} over {present.sum()} classes")

print("\n== aggregation sanity on published per-class tables ==")
full_method = [87.6, 36.7, 83.5, 29.1, 17.8, 33.6, 24.3, 35.2, 83.1, 28.9,
               76.3, 59.1, 14.0, 85.9, 25.4, 29.4, 2.6, 19.5, 9.3]
print(f"19-class adapted row -> mean {miou(np.array(full_method)):.2f} (reported 41.1)")
source_only = [23.1, 13.1, 42.6, 2.3, 13.9, 5.0, 10.3, 8.0, 68.6, 6.7,
               24.5, 40.8, 0.3, 48.1, 9.4, 16.3, 0.0, 0.0, 0.0]
print(f"19-class unadapted row -> mean {miou(np.array(source_only)):.2f} (reported 17.5)")
