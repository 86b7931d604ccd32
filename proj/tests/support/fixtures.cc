// Copyright 2026 The AAL Toolkit Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fixtures.h"

namespace aal::testing {

namespace {

constexpr uint16_t kPublic = 0x0001;
constexpr uint16_t kPrivate = 0x0002;
constexpr uint16_t kProtected = 0x0004;
constexpr uint16_t kStatic = 0x0008;
constexpr uint16_t kFinal = 0x0010;
constexpr uint16_t kSuper = 0x0020;
constexpr uint16_t kBridge = 0x0040;
constexpr uint16_t kVarargs = 0x0080;
constexpr uint16_t kInterface = 0x0200;
constexpr uint16_t kAbstract = 0x0400;
constexpr uint16_t kSynthetic = 0x1000;
constexpr uint16_t kEnum = 0x4000;

}  // namespace

std::map<std::string, Bytes> FixtureClassFiles() {
  std::map<std::string, Bytes> out;
  auto put = [&out](const std::string& name, const ClassFileWriter& w, uint16_t major = 52) {
    out["classfiles/" + name + ".class"] = w.Build(major);
  };

  {
    ClassFileWriter w("fixture/Empty");
    put("Empty", w);
  }
  {
    ClassFileWriter w("fixture/DefaultCtor");
    w.AddMethod(kPublic, "<init>", "()V");
    put("DefaultCtor", w);
  }
  {
    ClassFileWriter w("fixture/Outer");
    w.AddMethod(kPublic, "<init>", "()V");
    w.AddMethod(kPublic, "inner", "()Lfixture/Outer$Inner;");
    put("Outer", w);
  }
  {
    ClassFileWriter w("fixture/Outer$Inner");
    w.AddField(kFinal | kSynthetic, "this$0", "Lfixture/Outer;");
    w.AddMethod(kPublic, "<init>", "(Lfixture/Outer;)V");
    w.AddMethod(kPublic, "take", "(Lfixture/Outer$Inner$Deep;[Lfixture/Outer$Inner;)V");
    put("Outer$Inner", w);
  }
  {
    ClassFileWriter w("fixture/Outer$Inner$Deep", kPublic | kSuper | kStatic);
    w.AddMethod(kPublic, "<init>", "()V");
    put("Outer$Inner$Deep", w);
  }
  {
    ClassFileWriter w("fixture/Bridge");
    w.AddInterface("java/lang/Comparable");
    w.AddMethod(kPublic, "<init>", "()V");
    w.AddMethod(kPublic, "compareTo", "(Lfixture/Bridge;)I");
    w.AddMethod(kPublic | kBridge | kSynthetic, "compareTo", "(Ljava/lang/Object;)I");
    // Covariant return: the bridge shares the erased identity and collapses.
    w.AddMethod(kPublic | kBridge | kSynthetic, "copy", "()Ljava/lang/Object;");
    w.AddMethod(kPublic, "copy", "()Lfixture/Bridge;");
    put("Bridge", w);
  }
  {
    ClassFileWriter w("fixture/Varargs");
    w.AddMethod(kPublic, "<init>", "()V");
    w.AddMethod(kPublic | kStatic | kVarargs, "format",
                "(Ljava/lang/String;[Ljava/lang/Object;)Ljava/lang/String;");
    w.AddMethod(kPublic | kVarargs, "sum", "([I)J");
    put("Varargs", w);
  }
  {
    ClassFileWriter w("fixture/Fields");
    w.AddField(kPublic, "z", "Z");
    w.AddField(kProtected, "b", "B");
    w.AddField(0, "c", "C");
    w.AddField(kPrivate, "s", "S");
    w.AddField(kPublic | kStatic | kFinal, "MAX", "I");
    w.AddField(kPublic, "j", "J");
    w.AddField(kPublic, "f", "F");
    w.AddField(kPublic, "d", "D");
    w.AddField(kPublic, "grid", "[[D");
    w.AddField(kPublic, "names", "[Ljava/lang/String;");
    w.AddMethod(kPublic, "<init>", "()V");
    put("Fields", w);
  }
  {
    ClassFileWriter w("fixture/Statics");
    w.AddLongConstant(0x123456789abcdefLL);
    w.AddStringConstant("constant");
    w.AddLongConstant(-1);
    w.AddField(kPublic | kStatic, "COUNT", "J");
    w.AddMethod(kStatic, "<clinit>", "()V");
    w.AddMethod(kPrivate, "<init>", "()V");
    w.AddMethod(kPublic | kStatic, "wide", "(JD[[JLjava/util/Map;)D");
    put("Statics", w);
  }
  {
    ClassFileWriter w("fixture/Listener", kPublic | kInterface | kAbstract);
    w.AddField(kPublic | kStatic | kFinal, "VERSION", "I");
    w.AddMethod(kPublic | kAbstract, "onEvent", "(Ljava/lang/String;I)V", false);
    w.AddMethod(kPublic, "describe", "()Ljava/lang/String;");
    put("Listener", w);
  }
  {
    ClassFileWriter w("fixture/Color", kPublic | kFinal | kSuper | kEnum, "java/lang/Enum");
    w.AddField(kPublic | kStatic | kFinal | kEnum, "RED", "Lfixture/Color;");
    w.AddField(kPrivate | kStatic | kFinal | kSynthetic, "$VALUES", "[Lfixture/Color;");
    w.AddMethod(kPublic | kStatic, "values", "()[Lfixture/Color;");
    w.AddMethod(kPublic | kStatic, "valueOf", "(Ljava/lang/String;)Lfixture/Color;");
    w.AddMethod(kPrivate, "<init>", "(Ljava/lang/String;I)V");
    w.AddMethod(kStatic, "<clinit>", "()V");
    put("Color", w);
  }
  {
    ClassFileWriter w("fixture/Lambdas");
    w.AddMethod(kPublic, "<init>", "()V");
    w.AddMethod(kPublic, "run", "()V");
    w.AddMethod(kPrivate | kStatic | kSynthetic, "lambda$run$0", "(Ljava/lang/String;)V");
    w.AddMethod(kStatic | kSynthetic, "access$000", "(Lfixture/Lambdas;)I");
    put("Lambdas", w);
  }
  {
    ClassFileWriter w("fixture/Legacy");
    w.AddMethod(kPublic, "<init>", "()V");
    w.AddMethod(kPublic, "old", "(Ljava/util/Vector;)V");
    put("Legacy", w, 45);
  }
  {
    ClassFileWriter w("Unpackaged", kPublic | kSuper, "");
    w.AddMethod(kPublic, "<init>", "()V");
    put("Unpackaged", w, 65);
  }
  return out;
}

Bytes FixtureJar() {
  ZipWriter zip;
  zip.AddStored("META-INF/MANIFEST.MF", Bytes{'M', 'a', 'n', 'i', 'f', 'e', 's', 't', '-', 'V', 'e', 'r',
                                              's', 'i', 'o', 'n', ':', ' ', '1', '.', '0', '\n'});
  bool deflate = false;
  for (const auto& [path, bytes] : FixtureClassFiles()) {
    std::string entry = path.substr(std::string("classfiles/").size());
    std::string name = entry.substr(0, entry.size() - 6);
    std::string internal = name == "Unpackaged" ? name : "fixture/" + name;
    if (deflate) {
      zip.AddDeflated(internal + ".class", bytes);
    } else {
      zip.AddStored(internal + ".class", bytes);
    }
    deflate = !deflate;
  }
  ClassFileWriter module_info("module-info", 0x8000, "");
  zip.AddStored("module-info.class", module_info.Build(53));
  ClassFileWriter package_info("fixture/package-info", kInterface | kAbstract | kSynthetic);
  zip.AddDeflated("fixture/package-info.class", package_info.Build());
  zip.AddStored("fixture/readme.txt", Bytes{'h', 'i', '\n'});
  return zip.Build();
}

namespace {

const DexMethodKey kForName{"Ljava/lang/Class;", "forName", "Ljava/lang/Class;", {"Ljava/lang/String;"}};
const DexMethodKey kGetMethod{"Ljava/lang/Class;", "getMethod", "Ljava/lang/reflect/Method;",
                              {"Ljava/lang/String;", "[Ljava/lang/Class;"}};
const DexMethodKey kGetDeclaredMethod{"Ljava/lang/Class;", "getDeclaredMethod", "Ljava/lang/reflect/Method;",
                                      {"Ljava/lang/String;", "[Ljava/lang/Class;"}};
const DexMethodKey kGetDeclaredField{"Ljava/lang/Class;", "getDeclaredField", "Ljava/lang/reflect/Field;",
                                     {"Ljava/lang/String;"}};
const DexMethodKey kGetDeclaredConstructor{"Ljava/lang/Class;", "getDeclaredConstructor",
                                           "Ljava/lang/reflect/Constructor;", {"[Ljava/lang/Class;"}};
const DexMethodKey kLoadClass{"Ljava/lang/ClassLoader;", "loadClass", "Ljava/lang/Class;", {"Ljava/lang/String;"}};

}  // namespace

Bytes FixtureDex(int index) {
  DexWriter dex;
  if (index == 1) {
    const std::string main = "Lcom/example/app/MainActivity;";
    const std::string helper = "Lcom/example/app/Helper;";
    const std::string reflect = "Lcom/example/app/ReflectUser;";
    dex.DefineClass(main, "Landroid/app/Activity;");
    dex.DefineClass(helper);
    dex.DefineClass(reflect);
    dex.DefineClass("Lcom/example/app/Marker;");  // no class_data

    dex.AddMethod(main, "<init>", "V", {}, kPublic | 0x10000,
                  {DexInsn::InvokeDirect({"Landroid/app/Activity;", "<init>", "V", {}})});
    dex.AddMethod(main, "onCreate", "V", {"Landroid/os/Bundle;"}, kProtected,
                  {DexInsn::InvokeDirect({"Landroid/app/Activity;", "onCreate", "V", {"Landroid/os/Bundle;"}}),
                   DexInsn::Sget({"Landroid/os/Build$VERSION;", "SDK_INT", "I"}),
                   DexInsn::InvokeVirtual({"Ljava/lang/String;", "length", "I", {}}),
                   DexInsn::InvokeVirtual({"Landroidx/fragment/app/Fragment;", "onAttach", "V",
                                           {"Landroid/content/Context;"}}),
                   DexInsn::InvokeStatic({"Lcom/thirdparty/lib/Util;", "doIt", "V", {}}),
                   DexInsn::InvokeStatic({"Lcom/example/app/Helper;", "help", "V", {}}),
                   DexInsn::InvokeVirtual({"[I", "clone", "Ljava/lang/Object;", {}}),
                   DexInsn::InvokeVirtual({"Landroid/widget/TextView;", "setText", "V",
                                           {"Ljava/lang/CharSequence;"}})});
    dex.AddMethod(main, "foo", "V", {}, kPublic, {});
    dex.AddField(main, "count", "I", kPrivate);
    dex.AddField(main, "TAG", "Ljava/lang/String;", kPublic | kStatic | kFinal);

    dex.AddMethod(helper, "help", "V", {}, kPublic | kStatic,
                  {DexInsn::InvokeStaticRange({"Landroid/util/Log;", "println", "I",
                                               {"I", "Ljava/lang/String;", "Ljava/lang/String;"}})});

    // Reflection bodies, each with instruction forms around them to walk.
    dex.AddMethod(reflect, "systemProperty", "V", {}, kPublic | kStatic,
                  {DexInsn::Raw({0x0012}),  // const/4
                   DexInsn::ConstString("android.os.SystemProperties"),
                   DexInsn::InvokeStatic(kForName),
                   DexInsn::Raw({0x000c}),  // move-result-object
                   DexInsn::ConstStringJumbo("get"),
                   DexInsn::InvokeVirtual(kGetMethod)});
    dex.AddMethod(reflect, "activityProbe", "V", {}, kPublic | kStatic,
                  {DexInsn::ConstClass("Landroid/app/Activity;"),
                   DexInsn::Raw({0x0032, 0x0005}),  // if-eq, then a 4-unit skip target
                   DexInsn::ConstString("canStartActivityForResult"),
                   DexInsn::InvokeVirtual(kGetDeclaredMethod),
                   DexInsn::ReturnVoid(),
                   DexInsn::Raw({0x0000}),  // alignment nop
                   // packed-switch payload: 2 targets
                   DexInsn::Raw({0x0100, 0x0002, 0x0000, 0x0000, 0x0001, 0x0000, 0x0002, 0x0000})});
    dex.AddMethod(reflect, "fieldProbe", "V", {}, kPublic | kStatic,
                  {DexInsn::ConstClass("Landroid/view/View;"),
                   DexInsn::ConstString("mAttachInfo"),
                   DexInsn::InvokeVirtual(kGetDeclaredField),
                   DexInsn::ConstClass("[I"),
                   DexInsn::ReturnVoid(),
                   // fill-array-data payload: 3 elements of 4 bytes
                   DexInsn::Raw({0x0300, 0x0004, 0x0003, 0x0000, 0x0001, 0x0000, 0x0002, 0x0000, 0x0003, 0x0000})});
    dex.AddMethod(reflect, "hiddenProbe", "V", {}, kPublic,
                  {DexInsn::ConstString("android.hidden.Thing"),
                   DexInsn::InvokeVirtual(kLoadClass),
                   DexInsn::ConstString("secret"),
                   DexInsn::InvokeVirtual(kGetMethod),
                   DexInsn::InvokeVirtual(kGetDeclaredConstructor),
                   // sparse-switch payload: 1 key
                   DexInsn::ReturnVoid(),
                   DexInsn::Raw({0x0200, 0x0001, 0x0007, 0x0000, 0x0003, 0x0000})});
    dex.AddMethod(reflect, "jdkProbe", "V", {}, kPublic | kStatic,
                  {DexInsn::ConstString("java.util.ArrayList"), DexInsn::InvokeStatic(kForName)});
    dex.AddMethod(reflect, "ownProbe", "V", {}, kPublic | kStatic,
                  {DexInsn::ConstString("com.example.app.Helper"), DexInsn::InvokeStatic(kForName)});
    // Name computed at run time: no constant reaches the lookup.
    dex.AddMethod(reflect, "dynamicProbe", "V", {"Ljava/lang/String;"}, kPublic | kStatic,
                  {DexInsn::InvokeVirtual({"Ljava/lang/StringBuilder;", "toString", "Ljava/lang/String;", {}}),
                   DexInsn::InvokeStatic(kForName)});
    // A constant with no lookup in the same body is not a reflective use.
    dex.AddMethod(reflect, "noLookup", "V", {}, kPublic | kStatic,
                  {DexInsn::ConstString("android.os.ServiceManager")});

    dex.ReferenceField({"Landroid/view/View;", "mHiddenField", "I"});
    dex.ReferenceField({"Lcom/android/internal/R$styleable;", "Theme", "[I"});
    dex.ReferenceMethod({"Landroid/app/Service;", "onCreate", "V", {}});
    dex.AddString("unused string é \xF0\x9F\x98\x80");
  } else {
    const std::string second = "Lcom/example/app/Second;";
    dex.DefineClass(second, "Landroid/app/Service;");
    dex.AddMethod(second, "onCreate", "V", {}, kPublic,
                  {DexInsn::InvokeDirect({"Landroid/app/Service;", "onCreate", "V", {}}),
                   DexInsn::InvokeVirtual({"Lcom/example/app/MainActivity;", "foo", "V", {}}),
                   DexInsn::InvokeVirtual({"Landroid/widget/Toast;", "show", "V", {}}),
                   DexInsn::InvokeStatic({"Landroid/support/v4/app/ActivityCompat;", "finishAffinity", "V",
                                          {"Landroid/app/Activity;"}})});
    dex.ReferenceField({"Lcom/example/app/MainActivity;", "count", "I"});
  }
  return dex.Build();
}

Bytes FixtureApk() {
  ZipWriter zip;
  zip.AddStored("AndroidManifest.xml", Bytes{0x03, 0x00, 0x08, 0x00});
  zip.AddDeflated("classes.dex", FixtureDex(1));
  zip.AddDeflated("classes2.dex", FixtureDex(2));
  zip.AddStored("assets/classes.dex.txt", Bytes{'x'});  // not a DEX entry
  return zip.Build();
}

std::map<std::string, Bytes> BuildBinaryFixtures() {
  std::map<std::string, Bytes> out = FixtureClassFiles();
  out["fixture.jar"] = FixtureJar();
  out["fixture_classes.dex"] = FixtureDex(1);
  out["fixture_classes2.dex"] = FixtureDex(2);
  out["fixture.apk"] = FixtureApk();
  return out;
}

}  // namespace aal::testing
